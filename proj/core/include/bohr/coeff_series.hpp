#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bohr {

/// Coefficient-norm sequence ||A_0||, ||A_1||, ... of a power series f(z) = sum A_n z^n.
///
/// Stores finitely many norms. When `tail_ratio` is set, the sequence continues past
/// the stored range as ||A_{n+1}|| = ratio * ||A_n||, which both extends evaluation and
/// certifies truncation bounds. Without it the sequence is zero beyond the stored range.
class CoeffSeries {
 public:
  CoeffSeries() = default;

  /// Throws DomainError on negative or non-finite norms, non-zero entries below
  /// `start_index`, or a tail ratio outside [0, 1).
  explicit CoeffSeries(std::vector<double> norms, std::size_t start_index = 0,
                       std::optional<double> tail_ratio = std::nullopt);

  /// Norms (1, 0, 0, ...): the unimodular constant f = cI, |c| = 1.
  static CoeffSeries unimodular_constant();
  static CoeffSeries zero();

  /// ||A_n|| including the geometric extension.
  double norm(std::size_t n) const noexcept;
  double operator[](std::size_t n) const noexcept { return norm(n); }

  std::span<const double> stored() const noexcept { return norms_; }
  std::size_t stored_count() const noexcept { return norms_.size(); }
  std::size_t start_index() const noexcept { return start_; }
  std::optional<double> tail_ratio() const noexcept { return tail_ratio_; }

  /// True when the sequence is identically zero past the stored range.
  bool is_finite() const noexcept { return !tail_ratio_ || *tail_ratio_ == 0.0; }

  /// Coefficients of z^m f(z): every index moves up by m.
  CoeffSeries shifted(std::size_t m) const;

 private:
  std::vector<double> norms_;
  std::size_t start_ = 0;
  std::optional<double> tail_ratio_;
};

}  // namespace bohr
