#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bohr/coeff_series.hpp"
#include "bohr/poly.hpp"
#include "bohr/problem.hpp"
#include "bohr/weights.hpp"

namespace bohr {

/// Violations smaller than this are treated as round-off.
inline constexpr double kViolationTol = 1e-12;

struct FunctionalReport {
  double value = 0.0;
  double rhs = 1.0;
  bool satisfied = true;
  double margin = 0.0;  // rhs - value
};

FunctionalReport make_report(double value, double rhs);

/// sum_n ||A_n|| phi_n(r).
double majorant(const CoeffSeries& coeffs, const PhiSequence& phi, double r);

/// majorant(r) + P(S_r) with P built from p_coeffs(lambda_H, m_deg); rhs 1.
FunctionalReport thm33_functional(const CoeffSeries& coeffs, double r, double lambda_h, std::size_t m_deg);

/// ||A_0|| + sum_{n>=1} (||A_n|| + beta ||A_n||^2) r^n; rhs 1.
FunctionalReport thm34_functional(const CoeffSeries& coeffs, double r, double beta);

/// majorant(r) + ((1+l)/(2l(1+||A_0||)) + 2(1+l)r/(3(1-r))) sum_{n>=1} ||A_n||^2 r^(2n); rhs 1.
FunctionalReport thm35_functional(const CoeffSeries& coeffs, double r, double lambda_h);

/// majorant(r) + Q(S_{r(1-gamma)}); rhs 1.
FunctionalReport thm36_functional(const CoeffSeries& coeffs, double r, double gamma, const PolySpec& q);

/// ||A_m||^p phi_m(r) + sum_{n>m} ||A_n|| phi_n(r) + mu(r) A(f_m, phi, r); rhs phi_m(r).
///
/// Throws DomainError unless 0 < p <= 2 and the stored norms below m vanish.
FunctionalReport refined_general(const CoeffSeries& coeffs, const PhiSequence& phi, double p, std::size_t m,
                                 const MuFunction& mu, double r, ExponentMode mode = ExponentMode::Square);

/// Upper bound on sup_{|z|=r} ||f(omega(z))|| over Schwarz maps omega with a zero of order k:
/// the smaller of the Schwarz-Pick bound and the majorant sum ||A_n|| r^(kn).
double composed_norm_bound(const CoeffSeries& coeffs, unsigned k, double r);

/// composed_norm_bound(coeffs, m, r)^p phi_0(r) + mu(r) sum_{n>=N} ||A_n|| phi_n(r); rhs phi_0(r).
///
/// Throws DomainError unless 0 < p <= 2, N >= 1 and m >= 1.
FunctionalReport rogosinski_functional(const CoeffSeries& coeffs, const PhiSequence& phi, double p, std::size_t N,
                                       unsigned omega_order, const MuFunction& mu, double r);

enum class ClassicalVariant {
  Bohr11,             // sum |a_n| r^n
  Paulsen12,          // |a_0|^2 + sum_{n>=1} |a_n| r^n
  Kayumov13,          // |a_0| + sum_{n>=1} (|a_n| + |a_n|^2/2) r^n
  Refined14,          // sum |a_n| r^n + (1/(1+|a_0|) + r/(1-r)) sum_{n>=1} |a_n|^2 r^(2n)
  RogosinskiPartial,  // sum_{n<N} |a_n| r^n
  BohrRogosinskiSum,  // |f(z)| + sum_{n>=N} |a_n| r^n
};

/// Classical scalar inequalities; rhs 1. Throws ConfigError when a variant needing N
/// gets none, DomainError when N == 0.
FunctionalReport classical_suite(const CoeffSeries& coeffs, double r, ClassicalVariant variant,
                                 std::optional<std::size_t> N = std::nullopt);

/// Evaluates one functional of a coefficient series at radius r.
using FunctionalSelector = std::function<FunctionalReport(const CoeffSeries&, double)>;

/// Extremal coefficients for the problem: h_a on Omega_gamma, shifted to start at m for
/// refined problems. The domain must map to some Omega_gamma (see DomainSpec::gamma),
/// otherwise ConfigError.
CoeffSeries extremal_coeffs(const RadiusProblem& problem, double a, std::size_t count = 4096);

/// The left-hand side whose radius the problem describes (refined_general or
/// rogosinski_functional, with the problem's phi, p, m, N, mu).
FunctionalSelector problem_functional(const RadiusProblem& problem, ExponentMode mode = ExponentMode::Square);

/// {1 - 10^-k : k = 1..6}.
std::vector<double> default_a_grid();

/// First a in grid order whose extremal functional value exceeds rhs + 1e-12, if any.
///
/// Throws DomainError unless 0 < r < 1.
std::optional<double> sharpness_probe(const RadiusProblem& problem, const FunctionalSelector& functional, double r,
                                      std::span<const double> a_grid);
std::optional<double> sharpness_probe(const RadiusProblem& problem, double r, std::span<const double> a_grid);

}  // namespace bohr
