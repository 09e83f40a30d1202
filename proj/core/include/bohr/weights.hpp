#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "bohr/coeff_series.hpp"

namespace bohr {

/// Truncation policy for series without a closed-form tail.
struct SeriesEvalConfig {
  std::size_t truncation_n = 512;
  double tail_ratio_cap = 0.99;
  double abs_tol = 1e-12;
};

enum class PhiKind {
  Monomial,           // phi_n = r^n
  WeightedLinear,     // phi_n = (n+1) r^n
  WeightedQuadratic,  // phi_0 = 1, phi_n = n^2 r^n
  EvenOnly,           // phi_2n = r^2n, phi_2n+1 = 0
  OddOnly,            // phi_0 = 1, phi_2n = 0 (n >= 1), phi_2n-1 = r^(2n-1)
  Custom,
};

std::string_view to_string(PhiKind kind) noexcept;

/// Parses the CLI spelling ("monomial", "weighted_linear", ...). Custom is not parseable.
std::optional<PhiKind> parse_phi_kind(std::string_view name) noexcept;

/// A term sum with its certified error bound.
struct TailEstimate {
  double value = 0.0;
  double error_bound = 0.0;
};

/// A weight sequence phi = {phi_n(r)} of non-negative functions on [0, 1) whose sum
/// converges locally uniformly.
///
/// Built-in kinds have closed-form tails. Custom kinds take a term callable and an
/// optional tail callable; without the latter, tails are summed to `truncation_n`
/// terms and closed with a geometric bound from the ratio of the last terms.
/// Callables must be reentrant: values are shared freely across threads.
class PhiSequence {
 public:
  using TermFn = std::function<double(std::size_t n, double r)>;
  using TailFn = std::function<double(std::size_t N, double r)>;

  static PhiSequence monomial() { return PhiSequence(PhiKind::Monomial); }
  static PhiSequence weighted_linear() { return PhiSequence(PhiKind::WeightedLinear); }
  static PhiSequence weighted_quadratic() { return PhiSequence(PhiKind::WeightedQuadratic); }
  static PhiSequence even_only() { return PhiSequence(PhiKind::EvenOnly); }
  static PhiSequence odd_only() { return PhiSequence(PhiKind::OddOnly); }
  static PhiSequence of_kind(PhiKind kind);

  /// A non-empty `term` is ratio-tested at r in {0.1, 0.3, 0.5, 0.7, 0.9}; a failing
  /// test raises NonConvergenceError. An empty `term` is accepted here and raises
  /// ConfigError on first use.
  static PhiSequence custom(TermFn term, TailFn tail = {}, SeriesEvalConfig config = {});

  PhiKind kind() const noexcept { return kind_; }
  const SeriesEvalConfig& config() const noexcept { return config_; }

  /// phi_n(r). Throws DomainError unless 0 <= r < 1.
  double term(std::size_t n, double r) const;

  /// Phi_N(r) = sum_{n >= N} phi_n(r).
  double tail(std::size_t N, double r) const { return tail_estimate(N, r).value; }
  TailEstimate tail_estimate(std::size_t N, double r) const;

 private:
  explicit PhiSequence(PhiKind kind) : kind_(kind) {}

  TailEstimate custom_tail(std::size_t N, double r) const;

  PhiKind kind_ = PhiKind::Monomial;
  TermFn term_;
  TailFn tail_;
  SeriesEvalConfig config_;
};

inline double phi_term(const PhiSequence& phi, std::size_t n, double r) { return phi.term(n, r); }
inline double phi_tail(const PhiSequence& phi, std::size_t N, double r) { return phi.tail(N, r); }

/// Exponent applied to ||A_n|| inside the refined term.
enum class ExponentMode {
  Square,  // ||A_n||^2
  TwoN,    // ||A_n||^(2n)
};

/// sum_{n >= m+1} ||A_n||^e (phi_2n(r) / (1 + ||A_m||) + Phi_{2n+1}(r)).
///
/// Throws DomainError unless 0 <= r < 1.
double refined_sum(const CoeffSeries& coeffs, const PhiSequence& phi, std::size_t m, double r,
                   ExponentMode mode = ExponentMode::Square);

/// sum_{n >= first} ||A_n|| phi_n(r), truncated once the remainder bound
/// ||A_n|| Phi_n(r) drops below `abs_tol` (the norms never increase past the stored range).
double weighted_coeff_sum(const CoeffSeries& coeffs, const PhiSequence& phi, std::size_t first,
                          double r);

}  // namespace bohr
