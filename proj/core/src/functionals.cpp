#include "bohr/functionals.hpp"

#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/schur.hpp"

namespace bohr {
namespace {

void require_unit_interval(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1), got " + std::to_string(r));
}

void require_p(double p) {
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("p must lie in (0, 2], got " + std::to_string(p));
}

CoeffSeries squared(const CoeffSeries& coeffs) {
  std::vector<double> sq(coeffs.stored().begin(), coeffs.stored().end());
  for (double& v : sq) v *= v;
  std::optional<double> ratio;
  if (coeffs.tail_ratio()) ratio = *coeffs.tail_ratio() * *coeffs.tail_ratio();
  return CoeffSeries(std::move(sq), coeffs.start_index(), ratio);
}

// sum_{n>=1} ||A_n||^2 r^(2n)
double square_sum(const CoeffSeries& coeffs, double r) {
  return weighted_coeff_sum(squared(coeffs), PhiSequence::monomial(), 1, r * r);
}

}  // namespace

FunctionalReport make_report(double value, double rhs) {
  const double margin = rhs - value;
  return {value, rhs, margin >= -kViolationTol, margin};
}

double majorant(const CoeffSeries& coeffs, const PhiSequence& phi, double r) {
  return weighted_coeff_sum(coeffs, phi, 0, r);
}

FunctionalReport thm33_functional(const CoeffSeries& coeffs, double r, double lambda_h, std::size_t m_deg) {
  const PolySpec p = p_coeffs(lambda_h, m_deg);
  const double value = majorant(coeffs, PhiSequence::monomial(), r) + p(s_r(coeffs, r));
  return make_report(value, 1.0);
}

FunctionalReport thm34_functional(const CoeffSeries& coeffs, double r, double beta) {
  if (!(std::isfinite(beta) && beta >= 0.0)) throw DomainError("beta must be non-negative");
  const auto mono = PhiSequence::monomial();
  const double value = coeffs.norm(0) + weighted_coeff_sum(coeffs, mono, 1, r) +
                       beta * weighted_coeff_sum(squared(coeffs), mono, 1, r);
  return make_report(value, 1.0);
}

FunctionalReport thm35_functional(const CoeffSeries& coeffs, double r, double lambda_h) {
  require_unit_interval(r);
  if (!(std::isfinite(lambda_h) && lambda_h > 0.0)) throw DomainError("lambda_H must be positive");
  const double weight = (1.0 + lambda_h) / (2.0 * lambda_h * (1.0 + coeffs.norm(0))) +
                        2.0 * (1.0 + lambda_h) * r / (3.0 * (1.0 - r));
  const double value = majorant(coeffs, PhiSequence::monomial(), r) + weight * square_sum(coeffs, r);
  return make_report(value, 1.0);
}

FunctionalReport thm36_functional(const CoeffSeries& coeffs, double r, double gamma, const PolySpec& q) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in [0, 1)");
  const double value = majorant(coeffs, PhiSequence::monomial(), r) + q(s_r(coeffs, std::abs(r * (1.0 - gamma))));
  return make_report(value, 1.0);
}

FunctionalReport refined_general(const CoeffSeries& coeffs, const PhiSequence& phi, double p, std::size_t m,
                                 const MuFunction& mu, double r, ExponentMode mode) {
  require_p(p);
  require_unit_interval(r);
  for (std::size_t n = 0; n < m && n < coeffs.stored_count(); ++n) {
    if (coeffs.norm(n) != 0.0) {
      throw DomainError("coefficient " + std::to_string(n) + " below m = " + std::to_string(m) + " is non-zero");
    }
  }
  const double phi_m = phi.term(m, r);
  const double value = std::pow(coeffs.norm(m), p) * phi_m + weighted_coeff_sum(coeffs, phi, m + 1, r) +
                       mu(r) * refined_sum(coeffs, phi, m, r, mode);
  return make_report(value, phi_m);
}

double composed_norm_bound(const CoeffSeries& coeffs, unsigned k, double r) {
  const double pick = schwarz_composed_bound(coeffs, k, r);
  const double series = majorant(coeffs, PhiSequence::monomial(), std::pow(r, static_cast<double>(k)));
  return std::min(pick, series);
}

FunctionalReport rogosinski_functional(const CoeffSeries& coeffs, const PhiSequence& phi, double p, std::size_t N,
                                       unsigned omega_order, const MuFunction& mu, double r) {
  require_p(p);
  require_unit_interval(r);
  if (N == 0) throw DomainError("N must be at least 1");
  if (omega_order == 0) throw DomainError("Schwarz map order must be at least 1");
  const double phi0 = phi.term(0, r);
  const double value = std::pow(composed_norm_bound(coeffs, omega_order, r), p) * phi0 +
                       mu(r) * weighted_coeff_sum(coeffs, phi, N, r);
  return make_report(value, phi0);
}

FunctionalReport classical_suite(const CoeffSeries& coeffs, double r, ClassicalVariant variant,
                                 std::optional<std::size_t> N) {
  require_unit_interval(r);
  const auto mono = PhiSequence::monomial();
  const double a0 = coeffs.norm(0);
  auto need_n = [&]() {
    if (!N) throw ConfigError("this variant needs N");
    if (*N == 0) throw DomainError("N must be at least 1");
    return *N;
  };
  double value = 0.0;
  switch (variant) {
    case ClassicalVariant::Bohr11:
      value = majorant(coeffs, mono, r);
      break;
    case ClassicalVariant::Paulsen12:
      value = a0 * a0 + weighted_coeff_sum(coeffs, mono, 1, r);
      break;
    case ClassicalVariant::Kayumov13:
      value = a0 + weighted_coeff_sum(coeffs, mono, 1, r) + 0.5 * weighted_coeff_sum(squared(coeffs), mono, 1, r);
      break;
    case ClassicalVariant::Refined14:
      value = majorant(coeffs, mono, r) + (1.0 / (1.0 + a0) + r / (1.0 - r)) * square_sum(coeffs, r);
      break;
    case ClassicalVariant::RogosinskiPartial: {
      const std::size_t n_max = need_n();
      for (std::size_t n = 0; n < n_max; ++n) value += coeffs.norm(n) * std::pow(r, static_cast<double>(n));
      break;
    }
    case ClassicalVariant::BohrRogosinskiSum: {
      const std::size_t n_min = need_n();
      value = composed_norm_bound(coeffs, 1, r) + weighted_coeff_sum(coeffs, mono, n_min, r);
      break;
    }
  }
  return make_report(value, 1.0);
}

CoeffSeries extremal_coeffs(const RadiusProblem& problem, double a, std::size_t count) {
  const auto gamma = problem.domain.gamma();
  if (!gamma) {
    throw ConfigError("no extremal family for lambda_H = " + std::to_string(problem.domain.lambda_h()) +
                      " (needs 1/2 < lambda_H <= 1)");
  }
  const CoeffSeries base = mobius_gamma_coeffs(a, *gamma, count);
  return problem.kind == EquationKind::Refined ? base.shifted(problem.m) : base;
}

FunctionalSelector problem_functional(const RadiusProblem& problem, ExponentMode mode) {
  problem.validate();
  if (problem.kind == EquationKind::Refined) {
    return [problem, mode](const CoeffSeries& c, double r) {
      return refined_general(c, problem.phi, problem.p, problem.m, problem.mu, r, mode);
    };
  }
  return [problem](const CoeffSeries& c, double r) {
    return rogosinski_functional(c, problem.phi, problem.p, problem.N, static_cast<unsigned>(problem.m), problem.mu,
                                 r);
  };
}

std::vector<double> default_a_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 6; ++k) grid.push_back(1.0 - std::pow(10.0, -k));
  return grid;
}

std::optional<double> sharpness_probe(const RadiusProblem& problem, const FunctionalSelector& functional, double r,
                                      std::span<const double> a_grid) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("probe radius must lie in (0, 1)");
  for (double a : a_grid) {
    if (functional(extremal_coeffs(problem, a, 64), r).margin < -kViolationTol) return a;
  }
  return std::nullopt;
}

std::optional<double> sharpness_probe(const RadiusProblem& problem, double r, std::span<const double> a_grid) {
  return sharpness_probe(problem, problem_functional(problem), r, a_grid);
}

}  // namespace bohr
