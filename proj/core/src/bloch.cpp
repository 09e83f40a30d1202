#include "bohr/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/schur.hpp"

namespace bohr {
namespace {

constexpr double kPi = std::numbers::pi;

void require_nu(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("nu must lie in (0, 1], got " + std::to_string(nu));
}

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1), got " + std::to_string(r));
}

// Trapezoidal sum of lambda^(2 nu) over nodes theta_k = (k + offset) * 2 pi / n, k in [0, n).
double circle_sum(const HyperbolicDensity& density, double nu, double r, std::size_t n, double offset) {
  double sum = 0.0;
  const double h = 2.0 * kPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = (static_cast<double>(k) + offset) * h;
    sum += std::pow(density(std::polar(r, theta)), 2.0 * nu);
  }
  return sum;
}

double derivative_majorant(const CoeffSeries& coeffs, double rho) {
  double sum = 0.0;
  const std::size_t stored = coeffs.stored_count();
  for (std::size_t s = 1; s < stored; ++s) {
    sum += static_cast<double>(s) * coeffs.norm(s) * std::pow(rho, static_cast<double>(s - 1));
  }
  if (!coeffs.is_finite()) {
    for (std::size_t s = std::max<std::size_t>(stored, 1); s < stored + 200000; ++s) {
      const double t = static_cast<double>(s) * coeffs.norm(s) * std::pow(rho, static_cast<double>(s - 1));
      sum += t;
      if (t <= 1e-17 * sum) break;
    }
  }
  return sum;
}

}  // namespace

HyperbolicDensity HyperbolicDensity::unit_disk() { return HyperbolicDensity(Kind::UnitDisk); }

HyperbolicDensity HyperbolicDensity::omega_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in [0, 1)");
  HyperbolicDensity d(Kind::OmegaGamma);
  d.gamma_ = gamma;
  return d;
}

HyperbolicDensity HyperbolicDensity::custom(Fn fn) {
  if (!fn) throw ConfigError("custom density needs a callable");
  HyperbolicDensity d(Kind::Custom);
  d.fn_ = std::move(fn);
  return d;
}

double HyperbolicDensity::operator()(std::complex<double> z) const {
  double value = 0.0;
  switch (kind_) {
    case Kind::UnitDisk:
      value = 1.0 / (1.0 - std::norm(z));
      break;
    case Kind::OmegaGamma:
      value = (1.0 - gamma_) / (1.0 - std::norm((1.0 - gamma_) * z + gamma_));
      break;
    case Kind::Custom:
      value = fn_(z);
      break;
  }
  if (!(std::isfinite(value) && value > 0.0)) {
    throw SingularIntegrandError("density is not positive and finite at z = (" + std::to_string(z.real()) + ", " +
                                 std::to_string(z.imag()) + ")");
  }
  return value;
}

double m_integral(const HyperbolicDensity& density, double nu, double r, const QuadratureOptions& options) {
  require_nu(nu);
  require_radius(r);
  if (r == 0.0) return 0.0;
  const bool disk = density.kind() == HyperbolicDensity::Kind::UnitDisk ||
                    (density.kind() == HyperbolicDensity::Kind::OmegaGamma && density.gamma() == 0.0);
  if (disk && !options.force_quadrature) return r * r / std::pow(1.0 - r * r, 2.0 * nu);

  std::size_t n = std::max<std::size_t>(options.min_nodes, 4);
  double sum = circle_sum(density, nu, r, n, 0.0);
  double prev = r * r * sum / static_cast<double>(n);
  while (true) {
    if (2 * n > options.max_nodes) {
      throw NonConvergenceError("circle quadrature did not converge at r = " + std::to_string(r));
    }
    sum += circle_sum(density, nu, r, n, 0.5);
    n *= 2;
    const double cur = r * r * sum / static_cast<double>(n);
    if (std::abs(cur - prev) <= options.tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
}

double h_function(const HyperbolicDensity& density, double nu, double r, const QuadratureOptions& options) {
  return 2.0 * kPi * m_integral(density, nu, r, options) - 3.0 / kPi;
}

double n_function(double gamma, double nu, double r) {
  const double w = (1.0 - gamma) * r + gamma;
  return std::pow(1.0 - gamma, 2.0 * nu) * r * r * kPi * kPi - 6.0 * std::pow(1.0 - w * w, 2.0 * nu);
}

RootResult radius_thm41(const HyperbolicDensity& density, double nu, const RootOptions& root,
                        const QuadratureOptions& quad) {
  require_nu(nu);
  if (!(m_integral(density, nu, kLimitProbeRadius, quad) > kSixOverPiSquared)) {
    throw NoRootError("M(r) stays at or below 6/pi^2 up to r = 1 - 1e-6", NoRootError::Sign::Negative);
  }
  return min_positive_root([&](double r) { return m_integral(density, nu, r, quad) - kSixOverPiSquared; }, root);
}

RootResult radius_thm42(double gamma, double nu, const RootOptions& root) {
  require_nu(nu);
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in [0, 1)");
  RootOptions opts = root;
  opts.count_sign_changes = true;
  return min_positive_root([gamma, nu](double r) { return n_function(gamma, nu, r); }, opts);
}

RootResult radius_thm43(const HyperbolicDensity& density, double nu, const RootOptions& root,
                        const QuadratureOptions& quad) {
  require_nu(nu);
  if (!(h_function(density, nu, kLimitProbeRadius, quad) > 0.0)) {
    throw NoRootError("H(r) stays at or below 0 up to r = 1 - 1e-6", NoRootError::Sign::Negative);
  }
  return min_positive_root([&](double r) { return h_function(density, nu, r, quad); }, root);
}

FunctionalReport bloch_majorant_check(const CoeffSeries& coeffs, const HyperbolicDensity& density, double nu,
                                      double r, BlochMode mode, const MuFunction& mu) {
  require_nu(nu);
  require_radius(r);
  const double a = coeffs.norm(0);
  if (a > 1.0) throw InvalidTestFunction("||A_0|| exceeds 1");

  constexpr std::size_t kRadii = 200;
  constexpr std::size_t kAngles = 64;
  for (std::size_t i = 0; i <= kRadii; ++i) {
    const double rho = 0.999 * static_cast<double>(i) / kRadii;
    const double lhs = derivative_majorant(coeffs, rho);
    for (std::size_t j = 0; j < kAngles; ++j) {
      const double theta = 2.0 * kPi * static_cast<double>(j) / kAngles;
      const double bound = (1.0 - a) * std::pow(density(std::polar(rho, theta)), nu);
      if (lhs > bound * (1.0 + 1e-12) + 1e-15) {
        throw InvalidTestFunction("derivative bound fails at |z| = " + std::to_string(rho) +
                                  ", arg z = " + std::to_string(theta));
      }
    }
  }

  const auto mono = PhiSequence::monomial();
  const double tail = weighted_coeff_sum(coeffs, mono, 1, r);
  if (mode == BlochMode::Thm41) return make_report(a + tail, 1.0);
  return make_report(a + 2.0 * tail + mu(r) * s_r(coeffs, r, SrConvention::ScalarPi), 1.0);
}

}  // namespace bohr
