#include <benchmark/benchmark.h>

#include "lm/charts.hpp"
#include "lm/orbits.hpp"
#include "lm/spin.hpp"
#include "lm/weyl.hpp"

using namespace lm;
using namespace lm::charts;

static void BM_WedgeChartGroebner(benchmark::State& state) {
  for (auto _ : state) {
    Ideal I = chart_ideal({Case::A, 3, 2, 1, Level::Wedge}, Field::Fp(5));
    benchmark::DoNotOptimize(I.groebner());
  }
}
BENCHMARK(BM_WedgeChartGroebner)->Unit(benchmark::kMillisecond);

static void BM_SpinChartFlatness(benchmark::State& state) {
  for (auto _ : state) {
    Ideal I = chart_ideal({Case::A, 3, 2, 1, Level::Spin}, Field::Fp(5));
    benchmark::DoNotOptimize(is_flat_over_dvr(I, "u"));
  }
}
BENCHMARK(BM_SpinChartFlatness)->Unit(benchmark::kMillisecond);

static void BM_OrbitClosureDim(benchmark::State& state) {
  for (auto _ : state) {
    Ideal I = lm::orbits::orbit_closure_ideal(4, 2, lm::orbits::PairKind::Symplectic,
                                              Field::Fp(5));
    benchmark::DoNotOptimize(krull_dim(I));
  }
}
BENCHMARK(BM_OrbitClosureDim)->Unit(benchmark::kMillisecond);

static void BM_AdmissibleSet(benchmark::State& state) {
  int n = (int)state.range(0);
  weyl::Group G(n);
  int s = G.m();
  for (auto _ : state) benchmark::DoNotOptimize(G.admissible_set(n - s, s));
}
BENCHMARK(BM_AdmissibleSet)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SpinConstraints(benchmark::State& state) {
  ChartSpec spec{Case::B, 4, 2, 2, Level::Spin};
  RingPtr ring = chart_ring(spec, Field::Fp(5));
  for (auto _ : state) benchmark::DoNotOptimize(spin_constraints(spec, ring));
}
BENCHMARK(BM_SpinConstraints)->Unit(benchmark::kMillisecond);

static void BM_LatticePmBasis(benchmark::State& state) {
  spin::SpinSpace sp((int)state.range(0));
  std::vector<spin::Vec> lattice;
  for (const auto& S : sp.subsets()) lattice.push_back(sp.wedge(S));
  for (auto _ : state) benchmark::DoNotOptimize(sp.lattice_pm_basis(lattice, +1));
}
BENCHMARK(BM_LatticePmBasis)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
