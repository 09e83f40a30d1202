#pragma once

#include <optional>

namespace bohr {

/// Domain parameterization: a general simply connected domain given by its constant
/// lambda_H, or the disk Omega_gamma = {|z + gamma/(1-gamma)| < 1/(1-gamma)}.
class DomainSpec {
 public:
  enum class Mode { GeneralOmega, OmegaGamma };

  /// Throws DomainError unless lambda_h > 0.
  static DomainSpec general(double lambda_h);
  /// Throws DomainError unless 0 <= gamma < 1.
  static DomainSpec omega_gamma(double gamma);
  static DomainSpec unit_disk() { return omega_gamma(0.0); }

  Mode mode() const noexcept { return mode_; }

  /// lambda_H; equals 1/(1+gamma) on Omega_gamma.
  double lambda_h() const noexcept;

  /// gamma on Omega_gamma; for general domains the gamma with 1/(1+gamma) = lambda_H when
  /// lambda_H lies in (1/2, 1], otherwise nullopt.
  std::optional<double> gamma() const noexcept;

 private:
  DomainSpec(Mode mode, double value) : mode_(mode), value_(value) {}

  Mode mode_ = Mode::OmegaGamma;
  double value_ = 0.0;
};

}  // namespace bohr
