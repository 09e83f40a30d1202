#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "bohr/coeff_series.hpp"
#include "bohr/functionals.hpp"
#include "bohr/problem.hpp"
#include "bohr/radius.hpp"

namespace bohr {

/// 6/pi^2, the reciprocal of sum_{s>=1} 1/s^2.
inline constexpr double kSixOverPiSquared = 0.6079271018540267;

/// Hyperbolic density of a domain containing the unit disk.
class HyperbolicDensity {
 public:
  enum class Kind { UnitDisk, OmegaGamma, Custom };
  using Fn = std::function<double(std::complex<double>)>;

  /// 1/(1 - |z|^2).
  static HyperbolicDensity unit_disk();
  /// (1 - gamma)/(1 - |(1 - gamma) z + gamma|^2). Throws DomainError unless 0 <= gamma < 1.
  static HyperbolicDensity omega_gamma(double gamma);
  /// Throws ConfigError if fn is empty.
  static HyperbolicDensity custom(Fn fn);

  Kind kind() const noexcept { return kind_; }
  double gamma() const noexcept { return gamma_; }

  /// lambda(z); throws SingularIntegrandError when z lies outside the domain or the value
  /// is not positive and finite.
  double operator()(std::complex<double> z) const;

 private:
  explicit HyperbolicDensity(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::UnitDisk;
  double gamma_ = 0.0;
  Fn fn_;
};

struct QuadratureOptions {
  std::size_t min_nodes = 64;
  std::size_t max_nodes = std::size_t{1} << 22;
  double tol = 1e-10;
  /// Skip the unit-disk closed form and integrate numerically.
  bool force_quadrature = false;
};

/// M(r) = r^2/(2 pi) * int_0^{2 pi} lambda^(2 nu)(r e^{i theta}) d theta.
///
/// Trapezoidal rule with node doubling until successive values differ by at most tol
/// (relative to max(1, |M|)). Unit-disk densities use r^2/(1 - r^2)^(2 nu) unless
/// quadrature is forced. Throws DomainError unless 0 < nu <= 1 and 0 <= r < 1,
/// NonConvergenceError when max_nodes is reached.
double m_integral(const HyperbolicDensity& density, double nu, double r, const QuadratureOptions& options = {});

/// H(r) = r int_{|z|=r} lambda^(2 nu) |dz| - 3/pi = 2 pi M(r) - 3/pi.
double h_function(const HyperbolicDensity& density, double nu, double r, const QuadratureOptions& options = {});

/// N(r) = (1 - gamma)^(2 nu) r^2 pi^2 - 6 (1 - ((1 - gamma) r + gamma)^2)^(2 nu), on [0, 1].
double n_function(double gamma, double nu, double r);

/// r at which the limit conditions are checked.
inline constexpr double kLimitProbeRadius = 1.0 - 1e-6;

/// Smallest root of M(r) = 6/pi^2. Throws NoRootError when M(1 - 1e-6) <= 6/pi^2.
RootResult radius_thm41(const HyperbolicDensity& density, double nu, const RootOptions& root = {},
                        const QuadratureOptions& quad = {});

/// Smallest root of N(r) = 0, with the number of sign changes over the scan recorded.
/// Throws DomainError unless 0 <= gamma < 1 and 0 < nu <= 1.
RootResult radius_thm42(double gamma, double nu, const RootOptions& root = {});

/// Smallest root of H(r) = 0. Throws NoRootError when H(1 - 1e-6) <= 0.
RootResult radius_thm43(const HyperbolicDensity& density, double nu, const RootOptions& root = {},
                        const QuadratureOptions& quad = {});

enum class BlochMode { Thm41, Thm43 };

/// Checks sum ||A_s|| r^s <= 1 (Thm41), or 2 sum_{s>=1} ||A_s|| r^s + ||A_0|| + mu(r) S_r(f) <= 1
/// (Thm43, with ||f(z)|| bounded by the majorant and S_r the pi-scaled planar integral).
///
/// The derivative bound ||Df(z)|| <= (1 - ||A_0||) lambda^nu(z) is verified first on a polar grid
/// of |z| <= 0.999 through the majorant sum s ||A_s|| |z|^(s-1); failure raises InvalidTestFunction.
FunctionalReport bloch_majorant_check(const CoeffSeries& coeffs, const HyperbolicDensity& density, double nu,
                                      double r, BlochMode mode = BlochMode::Thm41,
                                      const MuFunction& mu = MuFunction::constant(0.0));

}  // namespace bohr
