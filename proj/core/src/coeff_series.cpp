#include "bohr/coeff_series.hpp"

#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

CoeffSeries::CoeffSeries(std::vector<double> norms, std::size_t start_index,
                         std::optional<double> tail_ratio)
    : norms_(std::move(norms)), start_(start_index), tail_ratio_(tail_ratio) {
  for (std::size_t n = 0; n < norms_.size(); ++n) {
    const double v = norms_[n];
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("coefficient norm at index " + std::to_string(n) +
                        " is negative or non-finite");
    }
    if (n < start_ && v != 0.0) {
      throw DomainError("coefficient norm at index " + std::to_string(n) +
                        " lies below the start index and must be zero");
    }
  }
  if (tail_ratio_ && !(*tail_ratio_ >= 0.0 && *tail_ratio_ < 1.0)) {
    throw DomainError("tail ratio must lie in [0, 1)");
  }
}

CoeffSeries CoeffSeries::unimodular_constant() { return CoeffSeries({1.0}); }

CoeffSeries CoeffSeries::zero() { return CoeffSeries({0.0}); }

double CoeffSeries::norm(std::size_t n) const noexcept {
  if (n < norms_.size()) return norms_[n];
  if (!tail_ratio_ || norms_.empty()) return 0.0;
  const double last = norms_.back();
  return last * std::pow(*tail_ratio_, static_cast<double>(n - (norms_.size() - 1)));
}

CoeffSeries CoeffSeries::shifted(std::size_t m) const {
  std::vector<double> out(m, 0.0);
  out.insert(out.end(), norms_.begin(), norms_.end());
  return CoeffSeries(std::move(out), start_ + m, tail_ratio_);
}

}  // namespace bohr
