#include "bohr/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

double max_jump(const MuFunction::Fn& fn, std::size_t steps) {
  double prev = fn(0.0);
  double worst = 0.0;
  for (std::size_t i = 1; i <= steps; ++i) {
    const double cur = fn(static_cast<double>(i) / static_cast<double>(steps));
    worst = std::max(worst, std::abs(cur - prev));
    prev = cur;
  }
  return worst;
}

}  // namespace

MuFunction MuFunction::constant(double value) {
  if (!(std::isfinite(value) && value >= 0.0)) {
    throw DomainError("mu must be non-negative and finite, got " + std::to_string(value));
  }
  MuFunction mu;
  mu.value_ = value;
  return mu;
}

MuFunction MuFunction::callable(Fn fn) {
  if (!fn) throw ConfigError("mu callable is empty");
  constexpr std::size_t kFine = 10000;
  for (std::size_t i = 0; i <= kFine; ++i) {
    const double r = static_cast<double>(i) / kFine;
    const double v = fn(r);
    if (!(std::isfinite(v) && v >= 0.0)) {
      throw DomainError("mu(" + std::to_string(r) + ") is negative or non-finite");
    }
  }
  const double coarse = max_jump(fn, 1000);
  const double fine = max_jump(fn, kFine);
  if (fine > 0.5 * coarse + 1e-9) throw ConfigError("mu does not look continuous on [0, 1]");
  MuFunction mu;
  mu.fn_ = std::move(fn);
  return mu;
}

void RadiusProblem::validate() const {
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("p must lie in (0, 2], got " + std::to_string(p));
  if (kind == EquationKind::Rogosinski) {
    if (N == 0) throw DomainError("Rogosinski problems need N >= 1");
    if (m == 0) throw DomainError("Rogosinski problems need a Schwarz map order m >= 1");
  }
}

}  // namespace bohr
