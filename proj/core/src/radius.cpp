#include "bohr/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

double checked(const ScalarFn& f, double r) {
  const double v = f(r);
  if (std::isnan(v)) throw DomainError("equation function is NaN at r = " + std::to_string(r));
  return v;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double gamma_of(const DomainSpec& domain) {
  if (domain.mode() != DomainSpec::Mode::OmegaGamma) {
    throw ConfigError("this closed form needs an Omega_gamma domain");
  }
  return *domain.gamma();
}

void require_p(double p) {
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("p must lie in (0, 2], got " + std::to_string(p));
}

// Bisection on a strictly monotone sign function g over [lo, hi] with g(lo) and g(hi) of
// opposite sign; returns the midpoint once the bracket cannot be split further.
template <class G>
double bisect_sign(G g, double lo, double hi) {
  const int s_lo = sign_of(g(lo));
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(g(mid));
    if (s == 0) return mid;
    (s == s_lo ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RootResult min_positive_root(const ScalarFn& f, const RootOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("tolerance must be positive");
  if (!(options.scan_step > 0.0 && options.scan_step < 1.0)) throw DomainError("scan step must lie in (0, 1)");
  const double step = options.scan_step;

  double prev_r = step;
  double prev_v = checked(f, prev_r);
  std::optional<std::pair<double, double>> bracket;
  std::optional<double> exact;
  std::size_t changes = 0;
  const int first_sign = sign_of(prev_v);
  if (first_sign == 0) exact = prev_r;

  for (std::size_t k = 2;; ++k) {
    const double r = static_cast<double>(k) * step;
    if (r >= 1.0) break;
    if ((bracket || exact) && !options.count_sign_changes) break;
    const double v = checked(f, r);
    if (sign_of(v) != 0 && sign_of(prev_v) != 0 && sign_of(v) != sign_of(prev_v)) {
      ++changes;
      if (!bracket && !exact) bracket.emplace(prev_r, r);
    } else if (sign_of(v) == 0) {
      ++changes;
      if (!bracket && !exact) exact = r;
    }
    prev_r = r;
    if (sign_of(v) != 0) prev_v = v;
  }

  RootResult result;
  result.scan_step = step;
  if (options.count_sign_changes) result.sign_changes = changes;
  if (exact) {
    result.value = *exact;
    result.lo = std::nextafter(*exact, 0.0);
    result.hi = std::nextafter(*exact, 1.0);
    result.residual = 0.0;
    return result;
  }
  if (!bracket) {
    throw NoRootError("no sign change of the equation function in (0, 1) at scan step " + std::to_string(step),
                      first_sign > 0 ? NoRootError::Sign::Positive : NoRootError::Sign::Negative);
  }

  double lo = bracket->first;
  double hi = bracket->second;
  const int s_lo = sign_of(checked(f, lo));
  double best = 0.5 * (lo + hi);
  double best_v = checked(f, best);
  int it = 0;
  for (; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = checked(f, mid);
    best = mid;
    best_v = v;
    if (hi - lo <= 2.0 * options.tol && std::abs(v) <= options.tol) break;
    if (v == 0.0) break;
    (sign_of(v) == s_lo ? lo : hi) = mid;
  }
  result.value = best;
  result.lo = lo;
  result.hi = hi;
  result.residual = best_v;
  result.iterations = it;
  return result;
}

ScalarFn radius_equation(const RadiusProblem& problem) {
  problem.validate();
  if (problem.kind == EquationKind::Refined) {
    const double two_lambda = 2.0 * problem.domain.lambda_h();
    return [phi = problem.phi, p = problem.p, m = problem.m, two_lambda](double r) {
      return p * phi.term(m, r) - two_lambda * phi.tail(m + 1, r);
    };
  }
  return [phi = problem.phi, p = problem.p, m = problem.m, N = problem.N, mu = problem.mu](double r) {
    const double rm = std::pow(r, static_cast<double>(m));
    return p * (1.0 - rm) / (1.0 + rm) * phi.term(0, r) - 2.0 * mu(r) * phi.tail(N, r);
  };
}

RootResult radius_refined(const RadiusProblem& problem, const RootOptions& options) {
  if (problem.kind != EquationKind::Refined) throw ConfigError("problem is not a refined radius problem");
  return min_positive_root(radius_equation(problem), options);
}

RootResult radius_rogosinski(const RadiusProblem& problem, const RootOptions& options) {
  if (problem.kind != EquationKind::Rogosinski) throw ConfigError("problem is not a Rogosinski radius problem");
  return min_positive_root(radius_equation(problem), options);
}

RootResult solve_radius(const RadiusProblem& problem, const RootOptions& options) {
  return problem.kind == EquationKind::Refined ? radius_refined(problem, options)
                                               : radius_rogosinski(problem, options);
}

ClosedFormResult closed_form_radius(ClosedFormCase which, const ClosedFormParams& params) {
  ClosedFormResult out;
  switch (which) {
    case ClosedFormCase::Thm33Radius:
      out.value = 1.0 / (1.0 + 2.0 * params.domain.lambda_h());
      break;
    case ClosedFormCase::RhoGamma: {
      const double g = gamma_of(params.domain);
      out.value = (1.0 + g) / (3.0 + g);
      break;
    }
    case ClosedFormCase::RGamma2: {
      const double g = gamma_of(params.domain);
      out.value = (1.0 + g) / (2.0 + g);
      break;
    }
    case ClosedFormCase::R2Even: {
      require_p(params.p);
      const double t = params.p * (1.0 + gamma_of(params.domain));
      out.value = std::sqrt(t / (2.0 + t));
      break;
    }
    case ClosedFormCase::R3Odd: {
      require_p(params.p);
      const double g = gamma_of(params.domain);
      const double t = params.p * (1.0 + g);
      out.value = (std::sqrt(1.0 + params.p * params.p * (1.0 + g)) - 1.0) / t;
      out.derived = (std::sqrt(1.0 + t * t) - 1.0) / t;
      out.discrepancy = std::abs(out.value - *out.derived) > 1e-12;
      break;
    }
    case ClosedFormCase::Rho0Lemma36: {
      const double g = gamma_of(params.domain);
      out.value = (1.0 - g * g) / (3.0 + g);
      break;
    }
    case ClosedFormCase::BohrClassic:
      out.value = 1.0 / 3.0;
      break;
    case ClosedFormCase::PaulsenHalf:
      out.value = 0.5;
      break;
  }
  return out;
}

double dr_upper_objective(double p, double a) {
  const double ap = std::pow(a, p);
  const double denom = std::pow(1.0 - a * a, p) + ap * (1.0 - ap);
  return std::pow((1.0 - ap) / denom, 1.0 / p);
}

DrBounds dr_bounds(double p) {
  if (!(p >= 1.0 && p < 2.0)) throw DomainError("p must lie in [1, 2), got " + std::to_string(p));
  DrBounds out;
  out.lower = std::pow(1.0 + std::pow(2.0 / p, 1.0 / (2.0 - p)), (p - 2.0) / p);

  auto objective = [p](double a) { return dr_upper_objective(p, a); };
  // d/da log of the objective, up to the positive factor 1/p.
  auto slope = [p](double a) {
    const double ap = std::pow(a, p);
    const double apm1 = std::pow(a, p - 1.0);
    const double w = 1.0 - a * a;
    const double denom = std::pow(w, p) + ap - ap * ap;
    const double d_denom = -2.0 * p * a * std::pow(w, p - 1.0) + p * apm1 - 2.0 * p * ap * apm1;
    return -p * apm1 / (1.0 - ap) - d_denom / denom;
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0 - 1e-9;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-7) {
    if (f1 > f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  double a = 0.5 * (lo + hi);
  const double left = std::max(lo - 1e-6, 1e-12);
  const double right = std::min(hi + 1e-6, 1.0 - 1e-12);
  if (slope(left) < 0.0 && slope(right) > 0.0) a = bisect_sign(slope, left, right);
  out.argmin = a;
  out.upper = objective(a);
  if (p == 1.0) out.upper = std::min(out.upper, 1.0 / 3.0);  // infimum approached as a -> 1
  return out;
}

TableSpec table_spec(int table_id) {
  auto row = [](double p, unsigned m, double mu, double printed) {
    TableRow r;
    r.p = p;
    r.m = m;
    r.mu = mu;
    r.printed = printed;
    return r;
  };
  switch (table_id) {
    case 1:
      return {PhiKind::WeightedLinear,
              {row(0.5, 1, 1, 0.090368), row(1, 2, 3, 0.073469), row(1.5, 5, 10, 0.067495),
               row(2, 10, 100, 0.00496281)}};
    case 2:
      return {PhiKind::WeightedQuadratic,
              {row(0.5, 1, 1, 0.119726), row(1, 5, 10, 0.0421611), row(1.5, 10, 25, 0.026917),
               row(2, 15, 30, 0.0295861)}};
    case 3:
      return {PhiKind::EvenOnly,
              {row(0.5, 1, 1, 0.333333), row(1, 5, 10, 0.218115), row(1.5, 10, 25, 0.170664),
               row(2, 15, 30, 0.0295861)}};
    case 4:
      return {PhiKind::OddOnly,
              {row(0.5, 1, 1, 0.171573), row(1, 5, 10, 0.049875), row(1.5, 10, 25, 0.029973),
               row(2, 15, 30, 0.0332964)}};
    default:
      throw DomainError("table id must be 1, 2, 3 or 4, got " + std::to_string(table_id));
  }
}

std::vector<TableRow> reproduce_table(int table_id) {
  const TableSpec spec = table_spec(table_id);
  std::vector<TableRow> rows;
  for (TableRow row : spec.rows) {
    RadiusProblem problem;
    problem.phi = PhiSequence::of_kind(spec.phi);
    problem.p = row.p;
    problem.m = row.m;
    problem.N = 1;
    problem.mu = MuFunction::constant(row.mu);
    problem.kind = EquationKind::Rogosinski;
    const auto root = radius_rogosinski(problem, RootOptions{1e-12, 1e-3, false});
    row.computed = root.value;
    row.residual = root.residual;
    row.delta = row.computed - row.printed;
    row.residual_at_printed = radius_equation(problem)(row.printed);
    row.matches = std::abs(row.delta) <= kTableMatchTol;
    row.erratum = std::abs(row.residual_at_printed) > kErratumResidual;
    rows.push_back(row);
  }
  return rows;
}

ImprovabilityReport improvability_diagnostic(const RadiusProblem& problem, double radius) {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("radius must lie in (0, 1)");
  const auto f = radius_equation(problem);
  ImprovabilityReport report;
  report.interval_condition = true;
  for (int k = 1; k <= 10; ++k) {
    const double r = radius + 1e-4 * k;
    if (r >= 1.0 || !(f(r) < 0.0)) {
      report.interval_condition = false;
      break;
    }
  }
  constexpr double h = 1e-6;
  report.derivative = (f(std::min(radius + h, 1.0 - 1e-12)) - f(std::max(radius - h, 0.0))) / (2.0 * h);
  report.derivative_condition = report.derivative < 0.0;
  return report;
}

RootResult estimate_function_radius(const CoeffSeries& coeffs, const PhiSequence& phi, double p, double q,
                                    const RootOptions& options) {
  require_p(p);
  if (!(q > 0.0 && std::isfinite(q))) throw DomainError("q must be positive");
  auto g = [&](double r) {
    const double phi0 = phi.term(0, r);
    const double tail = weighted_coeff_sum(coeffs, phi, 1, r);
    return phi0 - (std::pow(coeffs.norm(0), p) * phi0 + std::pow(tail, q));
  };
  return min_positive_root(g, options);
}

}  // namespace bohr
