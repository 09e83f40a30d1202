#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "bohr/coeff_series.hpp"
#include "bohr/domain.hpp"

namespace bohr {

/// Norms of the Taylor coefficients of h_a, the Mobius map of Omega_gamma onto the disk:
/// ||A_0|| = |a - gamma|/(1 - a gamma),
/// ||A_n|| = (1 - a^2)/(a (1 - a gamma)) * (a (1 - gamma)/(1 - a gamma))^n for n = 1..count.
/// The returned series carries the exact geometric tail ratio.
///
/// Throws DomainError unless 0 < a < 1 and 0 <= gamma < 1.
CoeffSeries mobius_gamma_coeffs(double a, double gamma, std::size_t count);

enum class SrConvention {
  Operator,  // sum n ||A_n||^2 r^(2n)
  ScalarPi,  // pi * sum n |a_n|^2 r^(2n), the area of f(|z| < r) for univalent f
};

/// S_r. Throws DomainError unless 0 <= r < 1.
double s_r(const CoeffSeries& coeffs, double r, SrConvention convention = SrConvention::Operator);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t d);
  static ComplexMatrix diagonal(const std::vector<value_type>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Largest singular value, from the largest eigenvalue of A^H A computed by cyclic
/// Jacobi sweeps on its real symmetric embedding.
///
/// Throws DomainError on non-finite entries.
double operator_norm(const ComplexMatrix& m);

/// One diagonal entry phase * (a - z^k)/(1 - a z^k) of a matrix test function.
struct MobiusEntry {
  double a = 0.5;
  std::complex<double> phase{1.0, 0.0};
  unsigned inner_power = 1;
};

/// Diagonal blend of scalar Mobius self-maps of the disk. Every entry maps the disk into
/// itself, so the function maps into the closed operator unit ball.
class MatrixCoeffFn {
 public:
  /// Throws DomainError if `entries` is empty, some a lies outside (0, 1), some phase is
  /// not unimodular (to 1e-12), or some inner power is zero.
  explicit MatrixCoeffFn(std::vector<MobiusEntry> entries);

  std::size_t dimension() const noexcept { return entries_.size(); }
  const std::vector<MobiusEntry>& entries() const noexcept { return entries_; }

  /// Diagonal coefficient matrices A_0..A_count.
  std::vector<ComplexMatrix> coefficient_matrices(std::size_t count) const;

 private:
  std::vector<MobiusEntry> entries_;
};

/// Norms ||A_0||..||A_count|| of the blend: the max entry modulus per index. The series is
/// stored without a tail ratio; callers choose `count` for the truncation they need.
CoeffSeries diag_blend_coeffs(const MatrixCoeffFn& fn, std::size_t count);

struct CoeffBoundReport {
  bool pass = true;
  std::optional<std::size_t> first_violation;
  /// max over stored n >= 1 of ||A_n|| / (lambda_H (1 - ||A_0||^2)).
  double worst_ratio = 0.0;
};

/// Checks ||A_n|| <= lambda_H (1 - ||A_0||^2) for every stored n >= 1, with relative slack 1e-12.
///
/// Throws DomainError if ||A_0|| > 1.
CoeffBoundReport check_coeff_bound(const CoeffSeries& coeffs, const DomainSpec& domain);

/// (||A_0|| + r)/(1 + ||A_0|| r), the Schwarz-Pick bound on ||f(z)|| at |z| = r.
double point_eval_bound(const CoeffSeries& coeffs, double r);

/// (||A_0|| + r^k)/(1 + ||A_0|| r^k), the bound on ||f(omega(z))|| when omega is a Schwarz
/// map with a zero of order k at the origin. Throws DomainError if k == 0.
double schwarz_composed_bound(const CoeffSeries& coeffs, unsigned k, double r);

}  // namespace bohr
