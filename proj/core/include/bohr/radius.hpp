#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bohr/coeff_series.hpp"
#include "bohr/domain.hpp"
#include "bohr/problem.hpp"
#include "bohr/weights.hpp"

namespace bohr {

struct RootResult {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
  int iterations = 0;
  double scan_step = 0.0;
  /// Sign changes over the whole scan grid, when counting was requested.
  std::optional<std::size_t> sign_changes;
};

struct RootOptions {
  double tol = 1e-12;
  double scan_step = 1e-3;
  bool count_sign_changes = false;
};

using ScalarFn = std::function<double(double)>;

/// Scans r = step, 2 step, ... below 1 for the first sign change of F, then bisects.
/// Bisection stops once hi - lo <= 2 tol and |F(mid)| <= tol, or when the bracket
/// cannot be split further in double precision.
///
/// Throws NoRootError (carrying the sign F kept) when no sign change is found,
/// DomainError on invalid options or a NaN value of F.
RootResult min_positive_root(const ScalarFn& f, const RootOptions& options = {});

/// Left-hand side of the problem's radius equation, positive below the radius:
/// refined: p phi_m(r) - 2 lambda_H Phi_{m+1}(r);
/// rogosinski: p (1 - r^m)/(1 + r^m) phi_0(r) - 2 mu(r) Phi_N(r).
ScalarFn radius_equation(const RadiusProblem& problem);

/// Throws ConfigError when the problem kind does not match.
RootResult radius_refined(const RadiusProblem& problem, const RootOptions& options = {});
RootResult radius_rogosinski(const RadiusProblem& problem, const RootOptions& options = {});
RootResult solve_radius(const RadiusProblem& problem, const RootOptions& options = {});

enum class ClosedFormCase {
  Thm33Radius,  // 1/(1 + 2 lambda_H)
  RhoGamma,     // (1 + gamma)/(3 + gamma)
  RGamma2,      // (1 + gamma)/(2 + gamma)
  R2Even,       // sqrt(p(1+gamma)/(2 + p(1+gamma)))
  R3Odd,        // printed and derived branches
  Rho0Lemma36,  // (1 - gamma^2)/(3 + gamma)
  BohrClassic,  // 1/3
  PaulsenHalf,  // 1/2
};

struct ClosedFormParams {
  DomainSpec domain = DomainSpec::unit_disk();
  double p = 1.0;
};

struct ClosedFormResult {
  double value = 0.0;
  /// R3Odd only: (sqrt(1 + p^2 (1+gamma)^2) - 1)/(p (1+gamma)), the root of
  /// p (1+gamma)(1 - r^2) = 2r. `value` holds the printed (sqrt(1 + p^2 (1+gamma)) - 1)/(p (1+gamma)).
  std::optional<double> derived;
  bool discrepancy = false;
};

/// Throws ConfigError when a gamma-based case gets a general-domain spec, DomainError
/// when p lies outside (0, 2] for the p-dependent cases.
ClosedFormResult closed_form_radius(ClosedFormCase which, const ClosedFormParams& params = {});

struct DrBounds {
  double lower = 0.0;
  double upper = 0.0;
  double argmin = 0.0;  // minimising a of the upper-bound objective
};

/// (1 - a^p)^(1/p) / ((1 - a^2)^p + a^p (1 - a^p))^(1/p).
double dr_upper_objective(double p, double a);

/// Lower bound (1 + (2/p)^(1/(2-p)))^((p-2)/p) and upper bound inf_{0 <= a < 1} of the
/// objective above. Throws DomainError unless 1 <= p < 2.
DrBounds dr_bounds(double p);

struct TableRow {
  double p = 0.0;
  unsigned m = 0;
  double mu = 0.0;
  double printed = 0.0;
  double computed = 0.0;
  double delta = 0.0;                // computed - printed
  double residual = 0.0;             // radius equation at the computed root
  double residual_at_printed = 0.0;  // radius equation at the printed value
  bool matches = false;              // |delta| <= 1e-5
  bool erratum = false;              // |residual_at_printed| > 1e-3
};

struct TableSpec {
  PhiKind phi;
  std::array<TableRow, 4> rows;
};

inline constexpr double kTableMatchTol = 1e-5;
inline constexpr double kErratumResidual = 1e-3;

/// Printed rows of tables 1..4 (computed fields left empty). Throws DomainError on other ids.
TableSpec table_spec(int table_id);

/// Recomputes every row with radius_rogosinski (N = 1) at tol 1e-12.
std::vector<TableRow> reproduce_table(int table_id);

struct ImprovabilityReport {
  /// Equation function negative at every sample of (R, R + 1e-3].
  bool interval_condition = false;
  /// Central-difference derivative of the equation function at R (h = 1e-6).
  double derivative = 0.0;
  bool derivative_condition = false;  // derivative < 0
};

/// Numerical diagnostic for the "cannot be improved" conditions; not a certificate.
ImprovabilityReport improvability_diagnostic(const RadiusProblem& problem, double radius);

/// sup{r : ||A_0||^p phi_0 + (sum_{n>=1} ||A_n|| phi_n)^q <= phi_0} for one function, as the
/// minimal root of phi_0 - lhs. Non-certified: the sum may cross zero between scan points.
/// Throws NoRootError with Sign::Positive when the inequality holds on the whole scan.
RootResult estimate_function_radius(const CoeffSeries& coeffs, const PhiSequence& phi, double p, double q,
                                    const RootOptions& options = {});

}  // namespace bohr
