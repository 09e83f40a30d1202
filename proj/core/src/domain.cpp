#include "bohr/domain.hpp"

#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

DomainSpec DomainSpec::general(double lambda_h) {
  if (!(std::isfinite(lambda_h) && lambda_h > 0.0)) {
    throw DomainError("lambda_H must be a positive finite number, got " + std::to_string(lambda_h));
  }
  return DomainSpec(Mode::GeneralOmega, lambda_h);
}

DomainSpec DomainSpec::omega_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw DomainError("gamma must lie in [0, 1), got " + std::to_string(gamma));
  }
  return DomainSpec(Mode::OmegaGamma, gamma);
}

double DomainSpec::lambda_h() const noexcept {
  return mode_ == Mode::OmegaGamma ? 1.0 / (1.0 + value_) : value_;
}

std::optional<double> DomainSpec::gamma() const noexcept {
  if (mode_ == Mode::OmegaGamma) return value_;
  if (value_ > 0.5 && value_ <= 1.0) return 1.0 / value_ - 1.0;
  return std::nullopt;
}

}  // namespace bohr
