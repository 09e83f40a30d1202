#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bohr {

/// Polynomial w -> sum_{j=1}^m coeffs[j-1] w^j with no constant term.
struct PolySpec {
  enum class Kind { P, Q };

  Kind kind = Kind::Q;
  std::vector<double> coeffs;

  std::size_t degree() const noexcept { return coeffs.size(); }
  double operator()(double w) const noexcept;
};

/// k_j = ((1 + lambda_H)/(1 + 2 lambda_H))^(2j), j = 1..m.
/// Throws DomainError unless lambda_h > 0 and m >= 1.
PolySpec p_coeffs(double lambda_h, std::size_t m);

struct DsResult {
  double value = 0.0;
  double argmax = 0.0;
};

/// max over a in [0, 1] of g(a) = a (1 + a)^2 (1 - a^2)^(2s - 2).
///
/// Golden-section search, then bisection on the sign of the strictly decreasing
/// log-derivative 1/a + 2/(1+a) - 4(s-1)a/(1-a^2) until the bracket is a few ulps wide.
/// Throws DomainError if s < 2.
DsResult d_s_max(unsigned s);
inline double d_s(unsigned s) { return d_s_max(s).value; }

/// 8 c_1 (3/8)^2 + sum_{s=2}^m 2(2s-1) c_s d_s (3/8)^(2s) - 1.
double q_constraint_residual(const PolySpec& q);

/// Solves the coefficient constraint for c_1 given c_2..c_m and returns c_1..c_m.
///
/// Throws DomainError if some tail coefficient is not positive and finite, and
/// InfeasibleError if the tail alone already reaches 1 (c_1 would not be positive).
PolySpec calibrate_q(std::span<const double> tail_coeffs);

/// A(gamma) = (3 + gamma)(1 - gamma^2) / ((3 + gamma)^2 - (1 - gamma^2)^2).
/// Throws DomainError unless 0 <= gamma < 1.
double a_gamma(double gamma);

enum class ProofFunction {
  J1Thm33,   // decreasing on [0, 1], J1(1) = 0
  F1Thm34,   // decreasing on [0, 1], F1(1) = 0
  JLemma36,  // increasing on [0, 1], J(1-) = 0
};

struct ProofCheckParams {
  double lambda_h = 1.0;  // F1
  std::size_t m = 1;      // J1
  double beta = 0.25;     // F1
  double gamma = 0.0;     // J
  PolySpec q;             // J
};

/// J1(x) = 16^m/(1+x) - 16^m/2 - sum_{j=1}^m 16^(m-j) (1-x^2)^(2j-1).
double proof_j1(std::size_t m, double x);
/// F1(x) = 2/(1+x) - 1 - lambda_H beta (1-x^2).
double proof_f1(double lambda_h, double beta, double x);
/// J(x) = 1 + 2 sum_j c_j (1-x^2)^(2j-1) A(gamma)^(2j) - 2/(1+x).
double proof_j(const PolySpec& q, double gamma, double x);

struct MonotoneReport {
  bool pass = true;
  bool monotone = true;
  bool boundary_ok = true;
  /// Grid point where the claimed direction is violated the most (or 0 when none).
  double worst_x = 0.0;
  /// Largest step against the claimed direction (<= 0 when monotone).
  double worst_step = 0.0;
  double value_at_0 = 0.0;
  double value_at_1 = 0.0;
};

/// Evaluates the selected function on grid_size uniform points of [0, 1] and checks the
/// claimed monotonicity and the boundary value at x = 1, both within 1e-9.
/// Throws DomainError if grid_size < 2.
MonotoneReport proof_monotone_check(ProofFunction which, const ProofCheckParams& params,
                                    std::size_t grid_size = 1000);

}  // namespace bohr
