#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radius.hpp"
#include "bohr/schur.hpp"

using namespace bohr;

namespace {

double quadratic_root(double a, double b, double c) { return (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a); }

// Tail Phi_1 of the weight used by each table, written out independently.
double table_tail(int table_id, double r) {
  switch (table_id) {
    case 1: return r * (2.0 - r) / ((1.0 - r) * (1.0 - r));
    case 2: return r * (1.0 + r) / std::pow(1.0 - r, 3);
    case 3: return r * r / (1.0 - r * r);
    default: return r / (1.0 - r * r);
  }
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) > 0) == (f(mid) > 0)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double table_oracle(int table_id, const TableRow& row) {
  const auto f = [&](double r) {
    const double rm = std::pow(r, row.m);
    return row.p * (1.0 - rm) / (1.0 + rm) - 2.0 * row.mu * table_tail(table_id, r);
  };
  double prev = 1e-6;
  for (double r = 1e-6; r < 1.0; r += 1e-5) {
    if (f(r) <= 0) return bisect(f, prev, r);
    prev = r;
  }
  return -1.0;
}

void check_certificate(const ScalarFn& f, const RootResult& res, double tol) {
  CHECK(res.lo <= res.value);
  CHECK(res.value <= res.hi);
  CHECK(std::abs(res.residual) <= 10.0 * tol);
  CHECK(f(res.lo) * f(res.hi) <= 0.0);
  const double fine = res.scan_step / 10.0;
  const bool positive = f(fine) > 0;
  for (double r = fine; r < res.lo; r += fine) CHECK((f(r) > 0) == positive);
}

RadiusProblem refined(PhiKind kind, double p, double gamma) {
  RadiusProblem problem;
  problem.phi = PhiSequence::of_kind(kind);
  problem.p = p;
  problem.domain = DomainSpec::omega_gamma(gamma);
  problem.mu = MuFunction::constant(0.0);
  return problem;
}

RadiusProblem rogosinski(PhiKind kind, double p, std::size_t m, double mu, std::size_t N = 1) {
  RadiusProblem problem;
  problem.kind = EquationKind::Rogosinski;
  problem.phi = PhiSequence::of_kind(kind);
  problem.p = p;
  problem.m = m;
  problem.N = N;
  problem.mu = MuFunction::constant(mu);
  return problem;
}

}  // namespace

TEST_CASE("min_positive_root examples") {
  const auto linear = min_positive_root([](double r) { return r - 1.0 / 3.0; });
  CHECK(linear.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const ScalarFn two_roots = [](double r) { return (r - 0.2) * (r - 0.8); };
  const auto first = min_positive_root(two_roots);
  CHECK(first.value == doctest::Approx(0.2).epsilon(1e-11));

  const ScalarFn corollary = [](double r) { return (1.0 - r) * (1.0 - r) - 2.0 * (1.0 + r) * r; };
  const auto res = min_positive_root(corollary);
  CHECK(res.value == doctest::Approx(quadratic_root(1.0, 4.0, -1.0)).epsilon(1e-12));
  check_certificate(corollary, res, 1e-12);
}

TEST_CASE("min_positive_root reports the sign it kept") {
  try {
    min_positive_root([](double) { return 1.0; });
    FAIL("expected NoRootError");
  } catch (const NoRootError& e) {
    CHECK(e.sign() == NoRootError::Sign::Positive);
  }
  try {
    min_positive_root([](double) { return -1.0; });
    FAIL("expected NoRootError");
  } catch (const NoRootError& e) {
    CHECK(e.sign() == NoRootError::Sign::Negative);
  }
  CHECK_THROWS_AS(min_positive_root([](double) { return std::nan(""); }), DomainError);
  CHECK_THROWS_AS(min_positive_root([](double r) { return r - 0.5; }, RootOptions{0.0, 1e-3, false}), DomainError);
}

TEST_CASE("radius_refined examples") {
  CHECK(radius_refined(refined(PhiKind::Monomial, 1.0, 0.0)).value == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
  CHECK(radius_refined(refined(PhiKind::Monomial, 2.0, 0.0)).value == doctest::Approx(0.5).epsilon(1e-11));
  CHECK(radius_refined(refined(PhiKind::EvenOnly, 1.0, 0.5)).value ==
        doctest::Approx(std::sqrt(1.5 / 3.5)).epsilon(1e-11));
  CHECK_THROWS_AS(radius_refined(rogosinski(PhiKind::Monomial, 1.0, 1, 1.0)), ConfigError);
}

TEST_CASE("radius_rogosinski examples") {
  CHECK(radius_rogosinski(rogosinski(PhiKind::WeightedLinear, 0.5, 1, 1.0)).value == doctest::Approx(0.090368).epsilon(1e-5));
  CHECK(radius_rogosinski(rogosinski(PhiKind::WeightedQuadratic, 0.5, 1, 1.0)).value ==
        doctest::Approx(0.119726).epsilon(1e-5));
  CHECK(radius_rogosinski(rogosinski(PhiKind::EvenOnly, 0.5, 1, 1.0)).value == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
  CHECK(radius_rogosinski(rogosinski(PhiKind::Monomial, 1.0, 1, 1.0)).value ==
        doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-11));
  CHECK_THROWS_AS(radius_rogosinski(refined(PhiKind::Monomial, 1.0, 0.0)), ConfigError);
  CHECK_THROWS_AS(radius_rogosinski(rogosinski(PhiKind::Monomial, 1.0, 1, 1.0, 0)), DomainError);
}

TEST_CASE("root certificates and minimality") {
  for (auto kind : {PhiKind::Monomial, PhiKind::WeightedLinear, PhiKind::WeightedQuadratic, PhiKind::EvenOnly,
                    PhiKind::OddOnly}) {
    for (double p : {0.5, 1.0, 2.0}) {
      const auto rp = refined(kind, p, 0.3);
      const auto rr = solve_radius(rp);
      check_certificate(radius_equation(rp), rr, 1e-12);

      const auto gp = rogosinski(kind, p, 2, 3.0);
      const auto gr = solve_radius(gp);
      check_certificate(radius_equation(gp), gr, 1e-12);
    }
  }
}

TEST_CASE("tables against an independent bisection oracle") {
  const auto start = std::chrono::steady_clock::now();
  for (int id = 1; id <= 4; ++id) {
    const auto rows = reproduce_table(id);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      CAPTURE(id);
      CAPTURE(i);
      CHECK(row.computed == doctest::Approx(table_oracle(id, row)).epsilon(1e-9));
      CHECK(std::abs(row.residual) <= 1e-11);
      const bool known_erratum = (id == 1 && i == 2) || (id == 3 && i == 3);
      CHECK(row.erratum == known_erratum);
      CHECK(row.matches == !known_erratum);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 1.0);
}

TEST_CASE("table spot values") {
  const auto t1 = reproduce_table(1);
  CHECK(t1[1].computed == doctest::Approx(0.073469).epsilon(1e-5));
  const auto t4 = reproduce_table(4);
  CHECK(t4[0].computed == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-10));
  const auto t3 = reproduce_table(3);
  CHECK(t3[3].computed == doctest::Approx(0.1796).epsilon(1e-3));
  CHECK(std::abs(t3[3].delta) > 0.1);
  CHECK_THROWS_AS(table_spec(5), DomainError);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_radius(ClosedFormCase::Thm33Radius, {DomainSpec::general(1.0), 1.0}).value == doctest::Approx(1.0 / 3.0));
  CHECK(closed_form_radius(ClosedFormCase::RhoGamma, {DomainSpec::omega_gamma(0.5), 1.0}).value ==
        doctest::Approx(1.5 / 3.5));
  CHECK(closed_form_radius(ClosedFormCase::BohrClassic).value == doctest::Approx(1.0 / 3.0));
  CHECK(closed_form_radius(ClosedFormCase::PaulsenHalf).value == 0.5);
  CHECK(closed_form_radius(ClosedFormCase::Rho0Lemma36, {DomainSpec::omega_gamma(0.5), 1.0}).value ==
        doctest::Approx(0.75 / 3.5));

  const auto r3 = closed_form_radius(ClosedFormCase::R3Odd, {DomainSpec::unit_disk(), 1.0});
  REQUIRE(r3.derived.has_value());
  CHECK(*r3.derived == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(r3.value == doctest::Approx(*r3.derived).epsilon(1e-14));
  CHECK_FALSE(r3.discrepancy);

  const auto r3g = closed_form_radius(ClosedFormCase::R3Odd, {DomainSpec::omega_gamma(0.5), 1.0});
  CHECK(r3g.discrepancy);
  CHECK(*r3g.derived == doctest::Approx(quadratic_root(1.5, 2.0, -1.5)).epsilon(1e-13));

  CHECK_THROWS_AS(closed_form_radius(ClosedFormCase::RhoGamma, {DomainSpec::general(2.0), 1.0}), ConfigError);
  CHECK_THROWS_AS(closed_form_radius(ClosedFormCase::R2Even, {DomainSpec::unit_disk(), 3.0}), DomainError);
}

TEST_CASE("closed forms agree with numeric roots") {
  for (int k = 0; k <= 9; ++k) {
    const double g = 0.1 * k;
    const ClosedFormParams params{DomainSpec::omega_gamma(g), 1.0};
    CHECK(std::abs(radius_refined(refined(PhiKind::Monomial, 1.0, g)).value -
                   closed_form_radius(ClosedFormCase::RhoGamma, params).value) <= 1e-10);
    CHECK(std::abs(radius_refined(refined(PhiKind::Monomial, 2.0, g)).value -
                   closed_form_radius(ClosedFormCase::RGamma2, params).value) <= 1e-10);
    CHECK(std::abs(closed_form_radius(ClosedFormCase::Thm33Radius, {DomainSpec::general(1.0 / (1.0 + g)), 1.0}).value -
                   (1.0 + g) / (3.0 + g)) <= 1e-15);
    for (double p : {0.5, 1.0, 2.0}) {
      const ClosedFormParams pp{DomainSpec::omega_gamma(g), p};
      CHECK(std::abs(radius_refined(refined(PhiKind::EvenOnly, p, g)).value -
                     closed_form_radius(ClosedFormCase::R2Even, pp).value) <= 1e-10);
      CHECK(std::abs(radius_refined(refined(PhiKind::OddOnly, p, g)).value -
                     *closed_form_radius(ClosedFormCase::R3Odd, pp).derived) <= 1e-10);
    }
  }
}

TEST_CASE("radius monotone in mu and p") {
  for (auto kind : {PhiKind::Monomial, PhiKind::WeightedLinear, PhiKind::EvenOnly}) {
    double prev = 1.0;
    for (double mu : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double r = radius_rogosinski(rogosinski(kind, 1.0, 2, mu)).value;
      CHECK(r <= prev);
      prev = r;
    }
    prev = 0.0;
    for (double p : {0.25, 0.5, 1.0, 1.5, 2.0}) {
      const double r = radius_rogosinski(rogosinski(kind, p, 2, 1.0)).value;
      CHECK(r >= prev);
      prev = r;
    }
  }
}

TEST_CASE("sharpness is consistent with solved radii") {
  std::vector<RadiusProblem> problems = {refined(PhiKind::Monomial, 1.0, 0.0), refined(PhiKind::Monomial, 1.0, 0.5),
                                         refined(PhiKind::Monomial, 2.0, 0.25), refined(PhiKind::EvenOnly, 1.0, 0.0),
                                         refined(PhiKind::OddOnly, 1.0, 0.0), rogosinski(PhiKind::Monomial, 1.0, 1, 1.0)};
  const std::vector<double> grid = {0.5, 0.9, 0.99, 0.999, 0.9999};
  for (const auto& problem : problems) {
    const double radius = solve_radius(problem).value;
    CAPTURE(radius);
    CHECK_FALSE(sharpness_probe(problem, radius - 0.01, grid).has_value());
    CHECK(sharpness_probe(problem, radius + 0.01, grid).has_value());
  }
}

TEST_CASE("improvability diagnostic for the monomial weight") {
  const auto problem = refined(PhiKind::Monomial, 1.0, 0.0);
  const auto rep = improvability_diagnostic(problem, solve_radius(problem).value);
  CHECK(rep.interval_condition);
  CHECK(rep.derivative_condition);
  CHECK(rep.derivative < 0.0);
}

TEST_CASE("Djakov-Ramanujan bounds") {
  CHECK(dr_bounds(1.0).lower == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(std::abs(dr_bounds(1.0 + 1e-9).lower - 1.0 / 3.0) <= 1e-8);
  CHECK_THROWS_AS(dr_bounds(2.0), DomainError);
  CHECK_THROWS_AS(dr_bounds(0.5), DomainError);

  for (double p : {1.1, 1.3, 1.5, 1.7, 1.9}) {
    const auto b = dr_bounds(p);
    CHECK(b.lower > 0.0);
    CHECK(b.upper < 1.0);
    CHECK(b.lower <= b.upper);
    const double lower = std::pow(1.0 + std::pow(2.0 / p, 1.0 / (2.0 - p)), (p - 2.0) / p);
    CHECK(b.lower == doctest::Approx(lower).epsilon(1e-14));

    double best = 1e300;
    double best_a = 0.0;
    constexpr int kGrid = 100000;
    for (int i = 0; i < kGrid; ++i) {
      const double a = static_cast<double>(i) / kGrid;
      const double v = dr_upper_objective(p, a);
      if (v < best) { best = v; best_a = a; }
    }
    for (int i = -kGrid; i <= kGrid; ++i) {
      const double a = best_a + static_cast<double>(i) / (static_cast<double>(kGrid) * kGrid);
      if (a < 0.0 || a >= 1.0) continue;
      best = std::min(best, dr_upper_objective(p, a));
    }
    CAPTURE(p);
    CHECK(std::abs(b.upper - best) <= 1e-8);
  }
}

TEST_CASE("per-function radius estimate") {
  // a + (1-a^2) r/(1-ar) = 1 at r = 1/(1+2a).
  for (double a : {0.3, 0.5, 0.8}) {
    const auto res = estimate_function_radius(mobius_gamma_coeffs(a, 0.0, 64), PhiSequence::monomial(), 1.0, 1.0);
    CHECK(res.value == doctest::Approx(1.0 / (1.0 + 2.0 * a)).epsilon(1e-10));
  }
  try {
    estimate_function_radius(CoeffSeries({0.5}), PhiSequence::monomial(), 1.0, 2.0);
    FAIL("expected NoRootError");
  } catch (const NoRootError& e) {
    CHECK(e.sign() == NoRootError::Sign::Positive);
  }
}
