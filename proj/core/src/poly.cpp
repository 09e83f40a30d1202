#include "bohr/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

constexpr double kCheckTol = 1e-9;
constexpr double kThreeEighths = 3.0 / 8.0;

double ds_objective(unsigned s, double a) {
  return a * (1.0 + a) * (1.0 + a) * std::pow(1.0 - a * a, 2.0 * s - 2.0);
}

double ds_log_derivative(unsigned s, double a) {
  return 1.0 / a + 2.0 / (1.0 + a) - 4.0 * (s - 1.0) * a / (1.0 - a * a);
}

}  // namespace

double PolySpec::operator()(double w) const noexcept {
  double acc = 0.0;
  for (std::size_t j = coeffs.size(); j > 0; --j) acc = (acc + coeffs[j - 1]) * w;
  return acc;
}

PolySpec p_coeffs(double lambda_h, std::size_t m) {
  if (!(std::isfinite(lambda_h) && lambda_h > 0.0)) throw DomainError("lambda_H must be positive");
  if (m == 0) throw DomainError("polynomial degree must be at least 1");
  const double base = (1.0 + lambda_h) / (1.0 + 2.0 * lambda_h);
  PolySpec p{PolySpec::Kind::P, std::vector<double>(m)};
  for (std::size_t j = 1; j <= m; ++j) p.coeffs[j - 1] = std::pow(base, 2.0 * static_cast<double>(j));
  return p;
}

DsResult d_s_max(unsigned s) {
  if (s < 2) throw DomainError("d_s is defined for s >= 2");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = ds_objective(s, x1);
  double f2 = ds_objective(s, x2);
  while (hi - lo > 1e-6) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = ds_objective(s, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = ds_objective(s, x1);
    }
  }
  // The log-derivative is positive left of the maximiser and negative right of it.
  lo = std::max(lo, std::numeric_limits<double>::min());
  while (ds_log_derivative(s, lo) <= 0.0) lo /= 2.0;
  while (ds_log_derivative(s, hi) >= 0.0) hi = (hi + 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (ds_log_derivative(s, mid) > 0.0 ? lo : hi) = mid;
  }
  const double a = 0.5 * (lo + hi);
  return {ds_objective(s, a), a};
}

double q_constraint_residual(const PolySpec& q) {
  if (q.coeffs.empty()) return -1.0;
  double sum = 8.0 * q.coeffs[0] * kThreeEighths * kThreeEighths;
  for (std::size_t s = 2; s <= q.coeffs.size(); ++s) {
    const double w = std::pow(kThreeEighths, 2.0 * static_cast<double>(s));
    sum += 2.0 * (2.0 * s - 1.0) * q.coeffs[s - 1] * d_s(static_cast<unsigned>(s)) * w;
  }
  return sum - 1.0;
}

PolySpec calibrate_q(std::span<const double> tail_coeffs) {
  double tail = 0.0;
  for (std::size_t i = 0; i < tail_coeffs.size(); ++i) {
    const double c = tail_coeffs[i];
    if (!(std::isfinite(c) && c > 0.0)) {
      throw DomainError("Q coefficient c_" + std::to_string(i + 2) + " must be positive and finite");
    }
    const auto s = static_cast<unsigned>(i + 2);
    tail += 2.0 * (2.0 * s - 1.0) * c * d_s(s) * std::pow(kThreeEighths, 2.0 * s);
  }
  if (!(tail < 1.0)) {
    throw InfeasibleError("tail coefficients use up the constraint (partial sum " + std::to_string(tail) +
                          " >= 1); c_1 would not be positive");
  }
  PolySpec q{PolySpec::Kind::Q, {}};
  q.coeffs.reserve(tail_coeffs.size() + 1);
  q.coeffs.push_back((1.0 - tail) / (9.0 / 8.0));
  q.coeffs.insert(q.coeffs.end(), tail_coeffs.begin(), tail_coeffs.end());
  return q;
}

double a_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in [0, 1)");
  const double u = 3.0 + gamma;
  const double v = 1.0 - gamma * gamma;
  return u * v / (u * u - v * v);
}

double proof_j1(std::size_t m, double x) {
  const double big = std::pow(16.0, static_cast<double>(m));
  const double w = 1.0 - x * x;
  double sum = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    sum += std::pow(16.0, static_cast<double>(m - j)) * std::pow(w, 2.0 * j - 1.0);
  }
  return big / (1.0 + x) - big / 2.0 - sum;
}

double proof_f1(double lambda_h, double beta, double x) {
  return 2.0 / (1.0 + x) - 1.0 - lambda_h * beta * (1.0 - x * x);
}

double proof_j(const PolySpec& q, double gamma, double x) {
  const double a2 = a_gamma(gamma) * a_gamma(gamma);
  const double w = 1.0 - x * x;
  double sum = 0.0;
  for (std::size_t j = 1; j <= q.coeffs.size(); ++j) {
    sum += q.coeffs[j - 1] * std::pow(w, 2.0 * j - 1.0) * std::pow(a2, static_cast<double>(j));
  }
  return 1.0 + 2.0 * sum - 2.0 / (1.0 + x);
}

MonotoneReport proof_monotone_check(ProofFunction which, const ProofCheckParams& params,
                                    std::size_t grid_size) {
  if (grid_size < 2) throw DomainError("grid needs at least two points");
  auto eval = [&](double x) {
    switch (which) {
      case ProofFunction::J1Thm33: return proof_j1(params.m, x);
      case ProofFunction::F1Thm34: return proof_f1(params.lambda_h, params.beta, x);
      case ProofFunction::JLemma36: return proof_j(params.q, params.gamma, x);
    }
    return 0.0;
  };
  // +1 when the function is claimed increasing, -1 when decreasing.
  const double direction = which == ProofFunction::JLemma36 ? 1.0 : -1.0;

  MonotoneReport report;
  report.worst_step = -std::numeric_limits<double>::infinity();
  double prev = eval(0.0);
  report.value_at_0 = prev;
  for (std::size_t i = 1; i < grid_size; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    const double cur = eval(x);
    const double against = -direction * (cur - prev);
    if (against > report.worst_step) {
      report.worst_step = against;
      report.worst_x = x;
    }
    prev = cur;
  }
  report.value_at_1 = prev;
  report.monotone = report.worst_step <= kCheckTol;
  report.boundary_ok = std::abs(report.value_at_1) <= kCheckTol;
  report.pass = report.monotone && report.boundary_ok;
  if (report.worst_step <= 0.0) report.worst_x = 0.0;
  return report;
}

}  // namespace bohr
