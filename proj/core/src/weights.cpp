#include "bohr/weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

constexpr std::size_t kMaxSeriesTerms = std::size_t{1} << 20;

void require_unit_interval(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("r must lie in [0, 1), got " + std::to_string(r));
  }
}

double ipow(double r, std::size_t n) { return std::pow(r, static_cast<double>(n)); }

std::size_t next_even(std::size_t n) { return n % 2 == 0 ? n : n + 1; }
std::size_t next_odd(std::size_t n) { return n % 2 == 1 ? n : n + 1; }

}  // namespace

std::string_view to_string(PhiKind kind) noexcept {
  switch (kind) {
    case PhiKind::Monomial: return "monomial";
    case PhiKind::WeightedLinear: return "weighted_linear";
    case PhiKind::WeightedQuadratic: return "weighted_quadratic";
    case PhiKind::EvenOnly: return "even_only";
    case PhiKind::OddOnly: return "odd_only";
    case PhiKind::Custom: return "custom";
  }
  return "unknown";
}

std::optional<PhiKind> parse_phi_kind(std::string_view name) noexcept {
  for (PhiKind k : {PhiKind::Monomial, PhiKind::WeightedLinear, PhiKind::WeightedQuadratic,
                    PhiKind::EvenOnly, PhiKind::OddOnly}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

PhiSequence PhiSequence::of_kind(PhiKind kind) {
  if (kind == PhiKind::Custom) throw ConfigError("custom weight sequences need a term callable");
  return PhiSequence(kind);
}

PhiSequence PhiSequence::custom(TermFn term, TailFn tail, SeriesEvalConfig config) {
  if (!(config.tail_ratio_cap > 0.0 && config.tail_ratio_cap < 1.0) || config.truncation_n < 4 ||
      !(config.abs_tol > 0.0)) {
    throw ConfigError("invalid series evaluation config");
  }
  PhiSequence phi(PhiKind::Custom);
  phi.term_ = std::move(term);
  phi.tail_ = std::move(tail);
  phi.config_ = config;
  if (phi.term_) {
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) (void)phi.custom_tail(0, r);
  }
  return phi;
}

double PhiSequence::term(std::size_t n, double r) const {
  require_unit_interval(r);
  switch (kind_) {
    case PhiKind::Monomial: return ipow(r, n);
    case PhiKind::WeightedLinear: return static_cast<double>(n + 1) * ipow(r, n);
    case PhiKind::WeightedQuadratic: {
      if (n == 0) return 1.0;
      const double dn = static_cast<double>(n);
      return dn * dn * ipow(r, n);
    }
    case PhiKind::EvenOnly: return n % 2 == 0 ? ipow(r, n) : 0.0;
    case PhiKind::OddOnly:
      if (n == 0) return 1.0;
      return n % 2 == 1 ? ipow(r, n) : 0.0;
    case PhiKind::Custom:
      if (!term_) throw ConfigError("custom weight sequence has no term callable");
      return term_(n, r);
  }
  return 0.0;
}

TailEstimate PhiSequence::tail_estimate(std::size_t N, double r) const {
  require_unit_interval(r);
  const double q = 1.0 - r;
  switch (kind_) {
    case PhiKind::Monomial: return {ipow(r, N) / q, 0.0};
    case PhiKind::WeightedLinear: {
      const double dn = static_cast<double>(N);
      return {ipow(r, N) * (dn + 1.0 - dn * r) / (q * q), 0.0};
    }
    case PhiKind::WeightedQuadratic: {
      if (N == 0) return {1.0 + r * (1.0 + r) / (q * q * q), 0.0};
      const double dn = static_cast<double>(N);
      const double poly = dn * dn - (2.0 * dn * dn - 2.0 * dn - 1.0) * r + (dn - 1.0) * (dn - 1.0) * r * r;
      return {ipow(r, N) * poly / (q * q * q), 0.0};
    }
    case PhiKind::EvenOnly: return {ipow(r, next_even(N)) / (1.0 - r * r), 0.0};
    case PhiKind::OddOnly: {
      const double odd = ipow(r, next_odd(N)) / (1.0 - r * r);
      return {N == 0 ? 1.0 + odd : odd, 0.0};
    }
    case PhiKind::Custom:
      if (tail_) return {tail_(N, r), 0.0};
      return custom_tail(N, r);
  }
  return {};
}

TailEstimate PhiSequence::custom_tail(std::size_t N, double r) const {
  if (!term_) throw ConfigError("custom weight sequence has no term callable");
  const std::size_t end = std::max(config_.truncation_n, N + 64);
  double sum = 0.0;
  std::array<double, 3> last{0.0, 0.0, 0.0};  // t_{end-3}, t_{end-2}, t_{end-1}
  for (std::size_t n = N; n < end; ++n) {
    const double t = term_(n, r);
    if (!std::isfinite(t) || t < 0.0) {
      throw DomainError("custom weight term is negative or non-finite at n = " + std::to_string(n));
    }
    sum += t;
    last = {last[1], last[2], t};
  }
  const double t_end = last[2];
  if (t_end == 0.0 && last[1] == 0.0) return {sum, 0.0};
  double ratio = 0.0;
  if (last[1] > 0.0) ratio = std::max(ratio, t_end / last[1]);
  if (last[0] > 0.0) ratio = std::max(ratio, std::sqrt(t_end / last[0]));
  if (last[1] == 0.0 && last[0] == 0.0) ratio = 1.0;
  if (ratio >= config_.tail_ratio_cap) {
    throw NonConvergenceError("custom weight sequence fails the ratio test at r = " +
                              std::to_string(r) + " (ratio " + std::to_string(ratio) + ")");
  }
  const double bound = t_end * ratio / (1.0 - ratio);
  return {sum + bound, bound};
}

double weighted_coeff_sum(const CoeffSeries& coeffs, const PhiSequence& phi, std::size_t first,
                          double r) {
  require_unit_interval(r);
  const double tol = phi.config().abs_tol;
  double sum = 0.0;
  const std::size_t stored = coeffs.stored_count();
  for (std::size_t n = first; n < stored; ++n) {
    const double c = coeffs.norm(n);
    if (c != 0.0) sum += c * phi.term(n, r);
  }
  if (coeffs.is_finite()) return sum;
  std::size_t n = std::max(first, stored);
  for (;; ++n) {
    const double c = coeffs.norm(n);
    if ((n - first) % 16 == 0 && c * phi.tail(n, r) <= tol) break;
    if (c == 0.0) break;
    if (n - first > kMaxSeriesTerms) {
      throw NonConvergenceError("coefficient series did not reach tolerance");
    }
    sum += c * phi.term(n, r);
  }
  return sum;
}

double refined_sum(const CoeffSeries& coeffs, const PhiSequence& phi, std::size_t m, double r,
                   ExponentMode mode) {
  require_unit_interval(r);
  const double am = coeffs.norm(m);
  const double tol = phi.config().abs_tol;
  auto power = [mode](double c, std::size_t n) {
    return mode == ExponentMode::Square ? c * c : std::pow(c, 2.0 * static_cast<double>(n));
  };
  auto bracket = [&](std::size_t n) {
    return phi.term(2 * n, r) / (1.0 + am) + phi.tail(2 * n + 1, r);
  };
  double sum = 0.0;
  const std::size_t stored = coeffs.stored_count();
  for (std::size_t n = m + 1; n < stored; ++n) {
    const double c = coeffs.norm(n);
    if (c != 0.0) sum += power(c, n) * bracket(n);
  }
  if (coeffs.is_finite()) return sum;

  // Past the stored range ||A_n|| = c_L q^(n-L) and the bracket does not increase, so the
  // remainder is at most the current term over (1 - q^2).
  const double q = *coeffs.tail_ratio();
  const double decay = 1.0 - q * q;
  for (std::size_t n = std::max(m + 1, stored);; ++n) {
    const double c = coeffs.norm(n);
    if (c == 0.0) break;
    const double t = power(c, n) * bracket(n);
    sum += t;
    if (t <= tol * decay) break;
    if (n > kMaxSeriesTerms) throw NonConvergenceError("refined sum did not reach tolerance");
  }
  return sum;
}

}  // namespace bohr
