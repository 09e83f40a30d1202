#include <benchmark/benchmark.h>

#include <complex>
#include <random>

#include "bohr/bloch.hpp"
#include "bohr/poly.hpp"
#include "bohr/radius.hpp"
#include "bohr/schur.hpp"

namespace {

void BM_ReproduceTable(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bohr::reproduce_table(id));
}
BENCHMARK(BM_ReproduceTable)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_RadiusRefined(benchmark::State& state) {
  bohr::RadiusProblem problem;
  problem.phi = bohr::PhiSequence::weighted_quadratic();
  problem.domain = bohr::DomainSpec::omega_gamma(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(bohr::radius_refined(problem));
}
BENCHMARK(BM_RadiusRefined)->Unit(benchmark::kMicrosecond);

void BM_DsMax(benchmark::State& state) {
  const auto s = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bohr::d_s_max(s));
}
BENCHMARK(BM_DsMax)->DenseRange(2, 6, 2);

void BM_MIntegral(benchmark::State& state) {
  const auto density = bohr::HyperbolicDensity::omega_gamma(0.5);
  const double r = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(bohr::m_integral(density, 0.5, r));
}
BENCHMARK(BM_MIntegral)->Arg(50)->Arg(90)->Arg(99)->Unit(benchmark::kMicrosecond);

void BM_OperatorNorm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(0);
  std::normal_distribution<double> gauss;
  bohr::ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = {gauss(rng), gauss(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(bohr::operator_norm(m));
}
BENCHMARK(BM_OperatorNorm)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

BENCHMARK_MAIN();
