#include "bohr/schur.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

constexpr double kBoundSlack = 1e-12;

void require_unit_interval(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("r must lie in [0, 1), got " + std::to_string(r));
  }
}

// Eigenvalues of a real symmetric matrix (row-major, n x n) by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double frob = 0.0;
  for (double v : a) frob += v * v;
  if (frob == 0.0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off <= 1e-32 * frob) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  return eig;
}

}  // namespace

CoeffSeries mobius_gamma_coeffs(double a, double gamma, std::size_t count) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("Mobius parameter a must lie in (0, 1), got " + std::to_string(a));
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw DomainError("gamma must lie in [0, 1), got " + std::to_string(gamma));
  }
  const double denom = 1.0 - a * gamma;
  const double ratio = a * (1.0 - gamma) / denom;
  const double scale = (1.0 - a * a) / (a * denom);
  std::vector<double> norms(count + 1);
  norms[0] = std::abs(a - gamma) / denom;
  double power = 1.0;
  for (std::size_t n = 1; n <= count; ++n) {
    power *= ratio;
    norms[n] = scale * power;
  }
  return CoeffSeries(std::move(norms), 0, ratio);
}

double s_r(const CoeffSeries& coeffs, double r, SrConvention convention) {
  require_unit_interval(r);
  const double r2 = r * r;
  double sum = 0.0;
  const std::size_t stored = coeffs.stored_count();
  for (std::size_t n = 1; n < stored; ++n) {
    const double c = coeffs.norm(n);
    sum += static_cast<double>(n) * c * c * std::pow(r2, static_cast<double>(n));
  }
  if (!coeffs.is_finite()) {
    // Past the stored range the terms are n c^2 q^(2(n-L)) r^(2n); ratio of successive terms
    // is below (n+1)/n * (q r)^2, so stop once a term is negligible and the ratio is < 1.
    const double q = *coeffs.tail_ratio();
    const double rho = q * q * r2;
    for (std::size_t n = std::max<std::size_t>(stored, 1);; ++n) {
      const double c = coeffs.norm(n);
      const double t = static_cast<double>(n) * c * c * std::pow(r2, static_cast<double>(n));
      sum += t;
      const double next_ratio = rho * static_cast<double>(n + 1) / static_cast<double>(n);
      if (next_ratio < 1.0 && t * next_ratio / (1.0 - next_ratio) <= 1e-16 * std::max(sum, 1e-300)) break;
      if (t == 0.0) break;
      if (n > (std::size_t{1} << 22)) throw NonConvergenceError("S_r did not converge");
    }
  }
  return convention == SrConvention::ScalarPi ? std::numbers::pi * sum : sum;
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<value_type>& entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimensions do not match");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double operator_norm(const ComplexMatrix& m) {
  double scale = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw DomainError("matrix has non-finite entries");
      }
      scale = std::max(scale, std::abs(v));
    }
  if (scale == 0.0) return 0.0;

  // H = (A/s)^H (A/s), embedded as [[Re H, -Im H], [Im H, Re H]].
  const std::size_t n = m.cols();
  std::vector<std::complex<double>> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < m.rows(); ++k) acc += std::conj(m(k, i) / scale) * (m(k, j) / scale);
      h[i * n + j] = acc;
      h[j * n + i] = std::conj(acc);
    }
  const std::size_t n2 = 2 * n;
  std::vector<double> b(n2 * n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = h[i * n + j];
      b[i * n2 + j] = v.real();
      b[i * n2 + (j + n)] = -v.imag();
      b[(i + n) * n2 + j] = v.imag();
      b[(i + n) * n2 + (j + n)] = v.real();
    }
  const auto eig = jacobi_eigenvalues(std::move(b), n2);
  const double top = *std::max_element(eig.begin(), eig.end());
  return scale * std::sqrt(std::max(top, 0.0));
}

MatrixCoeffFn::MatrixCoeffFn(std::vector<MobiusEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("matrix test function needs at least one entry");
  for (const auto& e : entries_) {
    if (!(e.a > 0.0 && e.a < 1.0)) {
      throw DomainError("Mobius parameter a must lie in (0, 1), got " + std::to_string(e.a));
    }
    if (!(std::abs(std::abs(e.phase) - 1.0) <= 1e-12)) throw DomainError("entry phase must be unimodular");
    if (e.inner_power == 0) throw DomainError("inner power must be positive");
  }
}

std::vector<ComplexMatrix> MatrixCoeffFn::coefficient_matrices(std::size_t count) const {
  const std::size_t d = entries_.size();
  std::vector<ComplexMatrix> out(count + 1, ComplexMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    const auto& e = entries_[i];
    // (a - w)/(1 - a w) = a - (1 - a^2) sum_{j >= 1} a^(j-1) w^j, with w = z^k.
    out[0](i, i) = e.phase * e.a;
    double power = 1.0;
    for (std::size_t j = 1; j * e.inner_power <= count; ++j) {
      out[j * e.inner_power](i, i) = -e.phase * (1.0 - e.a * e.a) * power;
      power *= e.a;
    }
  }
  return out;
}

CoeffSeries diag_blend_coeffs(const MatrixCoeffFn& fn, std::size_t count) {
  const auto mats = fn.coefficient_matrices(count);
  std::vector<double> norms(count + 1, 0.0);
  for (std::size_t n = 0; n <= count; ++n)
    for (std::size_t i = 0; i < fn.dimension(); ++i) norms[n] = std::max(norms[n], std::abs(mats[n](i, i)));
  return CoeffSeries(std::move(norms));
}

CoeffBoundReport check_coeff_bound(const CoeffSeries& coeffs, const DomainSpec& domain) {
  const double a0 = coeffs.norm(0);
  if (a0 > 1.0) throw DomainError("||A_0|| exceeds 1; the function is not in the unit ball");
  const double bound = domain.lambda_h() * (1.0 - a0 * a0);
  CoeffBoundReport report;
  for (std::size_t n = 1; n < coeffs.stored_count(); ++n) {
    const double c = coeffs.norm(n);
    const double ratio = bound > 0.0 ? c / bound : (c > 0.0 ? INFINITY : 0.0);
    report.worst_ratio = std::max(report.worst_ratio, ratio);
    if (c > bound * (1.0 + kBoundSlack) && !report.first_violation) {
      report.pass = false;
      report.first_violation = n;
    }
  }
  return report;
}

double point_eval_bound(const CoeffSeries& coeffs, double r) { return schwarz_composed_bound(coeffs, 1, r); }

double schwarz_composed_bound(const CoeffSeries& coeffs, unsigned k, double r) {
  require_unit_interval(r);
  if (k == 0) throw DomainError("Schwarz map order must be positive");
  const double a = coeffs.norm(0);
  const double rk = std::pow(r, static_cast<double>(k));
  return (a + rk) / (1.0 + a * rk);
}

}  // namespace bohr
