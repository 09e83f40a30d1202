#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "bohr/poly.hpp"
#include "bohr/radius.hpp"
#include "bohr/schur.hpp"

using namespace bohr;

namespace {

// Disk family h_a: ||A_0|| = a, ||A_n|| = (1 - a^2) a^(n-1).
double disk_majorant(double a, double r) { return a + (1.0 - a * a) * r / (1.0 - a * r); }
double disk_square_sum(double a, double r) { return std::pow(1.0 - a * a, 2) * r * r / (1.0 - a * a * r * r); }
double disk_s_r(double a, double r) { return std::pow(1.0 - a * a, 2) * r * r / std::pow(1.0 - a * a * r * r, 2); }

RadiusProblem theorem_c(double gamma) {
  RadiusProblem p;
  p.domain = DomainSpec::omega_gamma(gamma);
  p.mu = MuFunction::constant(0.0);
  return p;
}

}  // namespace

TEST_CASE("majorant examples") {
  const auto phi = PhiSequence::monomial();
  for (double r : {0.0, 0.3, 0.9}) CHECK(majorant(CoeffSeries::unimodular_constant(), phi, r) == 1.0);
  CHECK(majorant(mobius_gamma_coeffs(0.5, 0.0, 8), phi, 1.0 / 3.0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(majorant(CoeffSeries::zero(), phi, 0.7) == 0.0);
}

TEST_CASE("thm33_functional") {
  CHECK(thm33_functional(CoeffSeries::unimodular_constant(), 0.6, 2.0, 3).value == 1.0);

  const double a = 0.9;
  const double r = 1.0 / 3.0;
  const auto rep = thm33_functional(mobius_gamma_coeffs(a, 0.0, 16), r, 1.0, 2);
  const double s = disk_s_r(a, r);
  const double oracle = disk_majorant(a, r) + (4.0 / 9.0) * s + (16.0 / 81.0) * s * s;
  CHECK(rep.value == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(rep.satisfied);
  CHECK(rep.margin == doctest::Approx(1.0 - oracle).epsilon(1e-12));

  CHECK_FALSE(thm33_functional(mobius_gamma_coeffs(0.999, 0.0, 16), 0.45, 1.0, 2).satisfied);
}

TEST_CASE("thm34_functional") {
  const auto c = mobius_gamma_coeffs(0.7, 0.0, 16);
  CHECK(thm34_functional(c, 0.4, 0.0).value == doctest::Approx(majorant(c, PhiSequence::monomial(), 0.4)).epsilon(1e-15));
  CHECK(thm34_functional(CoeffSeries::unimodular_constant(), 0.4, 0.25).value == 1.0);

  const double a = 0.99;
  const double r = 1.0 / 3.0;
  const auto rep = thm34_functional(mobius_gamma_coeffs(a, 0.0, 16), r, 0.25);
  const double oracle = disk_majorant(a, r) + 0.25 * std::pow(1.0 - a * a, 2) * r / (1.0 - a * a * r);
  CHECK(rep.value == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(rep.satisfied);
}

TEST_CASE("thm35_functional") {
  CHECK(thm35_functional(CoeffSeries::unimodular_constant(), 0.5, 1.0).value == 1.0);
  CHECK(thm35_functional(CoeffSeries::zero(), 0.5, 1.0).value == 0.0);

  const double a = 0.999;
  const double r = 1.0 / 3.0;
  const auto rep = thm35_functional(mobius_gamma_coeffs(a, 0.0, 16), r, 1.0);
  const double weight = 2.0 / (2.0 * (1.0 + a)) + 4.0 * r / (3.0 * (1.0 - r));
  CHECK(rep.value == doctest::Approx(disk_majorant(a, r) + weight * disk_square_sum(a, r)).epsilon(1e-12));
  CHECK(rep.satisfied);
  CHECK(rep.margin >= 0.0);
}

TEST_CASE("thm36_functional evaluates S at r(1-gamma)") {
  const auto q = calibrate_q({});
  const double a = 0.6;
  const double gamma = 0.25;
  const double r = 0.3;
  const auto c = mobius_gamma_coeffs(a, gamma, 32);
  const double expected = majorant(c, PhiSequence::monomial(), r) + q(s_r(c, r * (1.0 - gamma)));
  CHECK(thm36_functional(c, r, gamma, q).value == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("refined_general") {
  const auto phi = PhiSequence::monomial();
  const auto zero_mu = MuFunction::constant(0.0);

  SUBCASE("reduces to the majorant") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> norms(10);
      for (double& v : norms) v = unit(rng);
      const CoeffSeries c(norms);
      const double r = 0.9 * unit(rng);
      CHECK(std::abs(refined_general(c, phi, 1.0, 0, zero_mu, r).value - majorant(c, phi, r)) <= 1e-15);
    }
  }
  SUBCASE("Bohr sum holds at 1/3") {
    CHECK(refined_general(mobius_gamma_coeffs(0.9, 0.0, 16), phi, 1.0, 0, zero_mu, 1.0 / 3.0).satisfied);
  }
  SUBCASE("equality for the unimodular constant") {
    for (double r : {0.1, 0.5, 0.8}) {
      const auto rep = refined_general(CoeffSeries::unimodular_constant(), phi, 1.5, 0, MuFunction::constant(2.0), r);
      CHECK(rep.value == rep.rhs);
    }
  }
  SUBCASE("even weights at the closed-form radius") {
    const double r = std::sqrt(1.0 / 3.0);
    const auto rep =
        refined_general(mobius_gamma_coeffs(0.99, 0.0, 64), PhiSequence::even_only(), 1.0, 0, MuFunction::constant(1.0), r);
    CHECK(rep.satisfied);
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS(refined_general(CoeffSeries::zero(), phi, 0.0, 0, zero_mu, 0.3), DomainError);
    CHECK_THROWS_AS(refined_general(CoeffSeries::zero(), phi, 2.5, 0, zero_mu, 0.3), DomainError);
    CHECK_THROWS_AS(refined_general(CoeffSeries({0.5, 0.1}), phi, 1.0, 1, zero_mu, 0.3), DomainError);
  }
}

TEST_CASE("rogosinski_functional") {
  const auto phi = PhiSequence::monomial();
  const auto one = MuFunction::constant(1.0);
  CHECK(rogosinski_functional(CoeffSeries::zero(), phi, 1.0, 1, 1, one, 0.4).value == 0.0);
  const auto eq = rogosinski_functional(CoeffSeries::unimodular_constant(), phi, 1.0, 1, 1, one, 0.4);
  CHECK(eq.value == eq.rhs);

  // Radius of (1-r)^2 = 2(1+r)r is sqrt(5) - 2.
  const auto c = mobius_gamma_coeffs(0.99, 0.0, 64);
  const auto below = rogosinski_functional(c, phi, 1.0, 1, 1, one, 0.22);
  const auto above = rogosinski_functional(c, phi, 1.0, 1, 1, one, 0.25);
  CHECK(below.satisfied);
  CHECK_FALSE(above.satisfied);

  const double a = 0.99;
  const double r = 0.22;
  const double oracle = (a + r) / (1.0 + a * r) + (1.0 - a * a) * r / (1.0 - a * r);
  CHECK(below.value == doctest::Approx(oracle).epsilon(1e-12));

  CHECK_THROWS_AS(rogosinski_functional(c, phi, 1.0, 0, 1, one, 0.2), DomainError);
  CHECK_THROWS_AS(rogosinski_functional(c, phi, 1.0, 1, 0, one, 0.2), DomainError);
  CHECK_THROWS_AS(rogosinski_functional(c, phi, 3.0, 1, 1, one, 0.2), DomainError);
}

TEST_CASE("composed_norm_bound is the smaller of two upper bounds") {
  const auto c = mobius_gamma_coeffs(0.6, 0.0, 32);
  for (double r : {0.1, 0.5, 0.9}) {
    const double sp = schwarz_composed_bound(c, 2, r);
    const double maj = majorant(c, PhiSequence::monomial(), r * r);
    CHECK(composed_norm_bound(c, 2, r) == doctest::Approx(std::min(sp, maj)));
  }
}

TEST_CASE("classical suite") {
  const auto c9 = mobius_gamma_coeffs(0.9, 0.0, 64);
  CHECK(classical_suite(c9, 1.0 / 3.0, ClassicalVariant::Bohr11).satisfied);
  CHECK(classical_suite(c9, 0.5, ClassicalVariant::Paulsen12).satisfied);
  CHECK(classical_suite(c9, 1.0 / 3.0, ClassicalVariant::Kayumov13).satisfied);
  CHECK(classical_suite(c9, 1.0 / 3.0, ClassicalVariant::Refined14).satisfied);
  CHECK_FALSE(classical_suite(mobius_gamma_coeffs(0.99, 0.0, 64), 0.4, ClassicalVariant::Bohr11).satisfied);

  CHECK(classical_suite(c9, 0.5, ClassicalVariant::Paulsen12).value ==
        doctest::Approx(0.81 + (1.0 - 0.81) * 0.5 / (1.0 - 0.45)).epsilon(1e-12));

  CHECK_THROWS_AS(classical_suite(c9, 0.3, ClassicalVariant::RogosinskiPartial), ConfigError);
  CHECK_THROWS_AS(classical_suite(c9, 0.3, ClassicalVariant::BohrRogosinskiSum), ConfigError);
  CHECK_THROWS_AS(classical_suite(c9, 0.3, ClassicalVariant::RogosinskiPartial, 0), DomainError);
  CHECK(classical_suite(c9, 0.5, ClassicalVariant::RogosinskiPartial, 1).value == doctest::Approx(0.9));
}

TEST_CASE("equality case for every functional") {
  const auto one = CoeffSeries::unimodular_constant();
  const auto mu = MuFunction::constant(1.0);
  for (double r : {0.0, 0.2, 0.5, 0.9}) {
    CHECK(std::abs(thm33_functional(one, r, 1.0, 3).margin) <= 1e-15);
    CHECK(std::abs(thm34_functional(one, r, 0.25).margin) <= 1e-15);
    CHECK(std::abs(thm35_functional(one, r, 0.5).margin) <= 1e-15);
    CHECK(std::abs(thm36_functional(one, r, 0.25, calibrate_q({})).margin) <= 1e-15);
    for (auto kind : {PhiKind::Monomial, PhiKind::WeightedLinear, PhiKind::WeightedQuadratic, PhiKind::EvenOnly,
                      PhiKind::OddOnly}) {
      const auto phi = PhiSequence::of_kind(kind);
      CHECK(std::abs(refined_general(one, phi, 1.0, 0, mu, r).margin) <= 1e-15);
      CHECK(std::abs(rogosinski_functional(one, phi, 1.0, 1, 1, mu, r).margin) <= 1e-15);
    }
    for (auto v : {ClassicalVariant::Bohr11, ClassicalVariant::Paulsen12, ClassicalVariant::Kayumov13,
                   ClassicalVariant::Refined14}) {
      CHECK(std::abs(classical_suite(one, r, v).margin) <= 1e-15);
    }
    CHECK(std::abs(classical_suite(one, r, ClassicalVariant::RogosinskiPartial, 2).margin) <= 1e-15);
    CHECK(std::abs(classical_suite(one, r, ClassicalVariant::BohrRogosinskiSum, 1).margin) <= 1e-15);
  }
}

TEST_CASE("functionals are non-decreasing in r") {
  const auto c = mobius_gamma_coeffs(0.7, 0.0, 128);
  const auto phi = PhiSequence::weighted_linear();
  const auto mu = MuFunction::constant(1.0);
  double prev33 = 0, prev34 = 0, prev35 = 0, prev_ref = 0, prev_rog = 0;
  for (int k = 0; k <= 90; ++k) {
    const double r = 0.01 * k;
    const double v33 = thm33_functional(c, r, 1.0, 2).value;
    const double v34 = thm34_functional(c, r, 0.25).value;
    const double v35 = thm35_functional(c, r, 1.0).value;
    const double vref = refined_general(c, phi, 1.0, 0, mu, r).value;
    const double vrog = rogosinski_functional(c, phi, 1.0, 1, 1, mu, r).value;
    CHECK(v33 >= prev33);
    CHECK(v34 >= prev34);
    CHECK(v35 >= prev35);
    CHECK(vref >= prev_ref);
    CHECK(vrog >= prev_rog);
    prev33 = v33;
    prev34 = v34;
    prev35 = v35;
    prev_ref = vref;
    prev_rog = vrog;
  }
}

TEST_CASE("guarantee sweep at r = 1/3 on the disk") {
  const double r = 1.0 / 3.0;
  for (double a : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999}) {
    const auto c = mobius_gamma_coeffs(a, 0.0, 64);
    CAPTURE(a);
    CHECK(thm33_functional(c, r, 1.0, 3).satisfied);
    CHECK(thm34_functional(c, r, 0.25).satisfied);
    CHECK(thm35_functional(c, r, 1.0).satisfied);
  }

  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<unsigned> power(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = 0.05 + 0.9 * unit(rng);
    std::vector<MobiusEntry> entries(dim(rng));
    for (auto& e : entries) e = MobiusEntry{a, std::polar(1.0, 2.0 * std::numbers::pi * unit(rng)), power(rng)};
    const auto c = diag_blend_coeffs(MatrixCoeffFn(entries), 600);
    CAPTURE(trial);
    CHECK(thm33_functional(c, r, 1.0, 3).satisfied);
    CHECK(thm34_functional(c, r, 0.25).satisfied);
    CHECK(thm35_functional(c, r, 1.0).satisfied);
  }
}

TEST_CASE("refined_general holds at the solved radius for every built-in weight") {
  for (auto kind : {PhiKind::Monomial, PhiKind::WeightedLinear, PhiKind::WeightedQuadratic, PhiKind::EvenOnly,
                    PhiKind::OddOnly}) {
    RadiusProblem problem;
    problem.phi = PhiSequence::of_kind(kind);
    problem.mu = MuFunction::constant(0.0);
    const double radius = solve_radius(problem).value;
    for (double a : {0.1, 0.5, 0.9, 0.99, 0.999}) {
      CAPTURE(to_string(kind));
      CAPTURE(a);
      const auto c = mobius_gamma_coeffs(a, 0.0, 4096);
      CHECK(refined_general(c, problem.phi, 1.0, 0, problem.mu, radius).satisfied);
    }
  }
}

TEST_CASE("sharpness probe for the monomial weight on the disk") {
  const auto problem = theorem_c(0.0);
  const std::vector<double> grid = {0.9, 0.99, 0.999};
  CHECK_FALSE(sharpness_probe(problem, 1.0 / 3.0 - 0.02, grid).has_value());
  const auto witness = sharpness_probe(problem, 1.0 / 3.0 + 0.02, grid);
  REQUIRE(witness.has_value());
  CHECK(*witness >= 0.99);
  CHECK_FALSE(sharpness_probe(problem, 1.0 / 3.0, grid).has_value());

  CHECK_THROWS_AS(sharpness_probe(problem, 0.0, grid), DomainError);
  CHECK(default_a_grid().size() == 6);
  CHECK(default_a_grid().back() == doctest::Approx(1.0 - 1e-6));
}

TEST_CASE("extremal coefficients follow the problem") {
  RadiusProblem problem;
  problem.m = 2;
  problem.domain = DomainSpec::omega_gamma(0.5);
  const auto c = extremal_coeffs(problem, 0.7, 16);
  const auto base = mobius_gamma_coeffs(0.7, 0.5, 16);
  CHECK(c.norm(1) == 0.0);
  CHECK(c.norm(2) == doctest::Approx(base.norm(0)));
  CHECK(c.norm(5) == doctest::Approx(base.norm(3)));

  problem.domain = DomainSpec::general(3.0);
  CHECK_THROWS_AS(extremal_coeffs(problem, 0.7), ConfigError);
}

TEST_CASE("mu validation") {
  CHECK_THROWS_AS(MuFunction::constant(-1.0), DomainError);
  CHECK_THROWS_AS(MuFunction::callable([](double) { return -1.0; }), DomainError);
  CHECK_THROWS_AS(MuFunction::callable([](double r) { return r < 0.5 ? 0.0 : 1.0; }), ConfigError);
  const auto smooth = MuFunction::callable([](double r) { return 1.0 + r * r; });
  CHECK(smooth(0.5) == doctest::Approx(1.25));
  CHECK_FALSE(smooth.is_constant());
}
