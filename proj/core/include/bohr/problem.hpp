#pragma once

#include <cstddef>
#include <functional>

#include "bohr/domain.hpp"
#include "bohr/weights.hpp"

namespace bohr {

/// Non-negative continuous multiplier mu(r) on [0, 1].
class MuFunction {
 public:
  using Fn = std::function<double(double)>;

  /// Throws DomainError unless value >= 0 and finite.
  static MuFunction constant(double value);

  /// Samples fn on [0, 1] and throws DomainError on a negative or non-finite value, or
  /// ConfigError when the largest jump on a 1e-4 grid is not well below the largest jump
  /// on a 1e-3 grid (a discontinuity).
  static MuFunction callable(Fn fn);

  bool is_constant() const noexcept { return !fn_; }
  double operator()(double r) const { return fn_ ? fn_(r) : value_; }

 private:
  MuFunction() = default;

  double value_ = 0.0;
  Fn fn_;
};

enum class EquationKind {
  Refined,     // p phi_m(r) - 2 lambda_H Phi_{m+1}(r) = 0
  Rogosinski,  // p (1 - r^m)/(1 + r^m) phi_0(r) - 2 mu(r) Phi_N(r) = 0
};

/// One radius equation. For Rogosinski problems `m` is the order of the Schwarz map.
struct RadiusProblem {
  PhiSequence phi = PhiSequence::monomial();
  double p = 1.0;
  std::size_t m = 0;
  std::size_t N = 1;
  MuFunction mu = MuFunction::constant(1.0);
  DomainSpec domain = DomainSpec::unit_disk();
  EquationKind kind = EquationKind::Refined;

  /// Throws DomainError unless 0 < p <= 2, and for Rogosinski problems N >= 1 and m >= 1.
  void validate() const;
};

}  // namespace bohr
