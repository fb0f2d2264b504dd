#include <benchmark/benchmark.h>

#include <random>

#include "ilwlab/evolution.hpp"
#include "ilwlab/field.hpp"
#include "ilwlab/gauge.hpp"
#include "ilwlab/multipliers.hpp"

namespace {

ilw::SpectralField random_field(int n_points, int max_mode, unsigned seed) {
  const ilw::TorusGrid g = ilw::make_grid(1.0, n_points);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ilw::SpectralField f(g);
  for (int n = 1; n <= max_mode; ++n) {
    const ilw::cdouble c(gauss(rng), gauss(rng));
    f.set_coeff(n, 0.01 * c);
    f.set_coeff(-n, std::conj(0.01 * c));
  }
  return f;
}

void BM_TransformRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ilw::SpectralField f = random_field(n, n / 4, 1);
  const auto samples = ilw::inverse_transform(f);
  for (auto _ : state) {
    auto g = ilw::transform(f.grid(), samples);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_TransformRoundTrip)->Arg(256)->Arg(1024)->Arg(4096);

void BM_MultiplierApply(benchmark::State& state) {
  const ilw::SpectralField f = random_field(1024, 256, 2);
  const auto spec = ilw::MultiplierSpec::tilbert(1.0);
  for (auto _ : state) {
    auto g = ilw::apply(spec, f);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_MultiplierApply);

void BM_NonlinearRhs(benchmark::State& state) {
  const ilw::SpectralField f = random_field(static_cast<int>(state.range(0)), 32, 3);
  for (auto _ : state) {
    auto g = ilw::nonlinear_rhs(f);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_NonlinearRhs)->Arg(256)->Arg(1024);

void BM_Etdrk4Step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ilw::SpectralField f = random_field(n, 32, 4);
  const ilw::Etdrk4Stepper stepper(f.grid(), ilw::EquationSpec::ilw(1.0), 1e-3);
  for (auto _ : state) {
    auto g = stepper.step(f);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_Etdrk4Step)->Arg(256)->Arg(1024);

void BM_GaugeW(benchmark::State& state) {
  const ilw::SpectralField f = random_field(512, 64, 5);
  for (auto _ : state) {
    auto w = ilw::gauge_w(f);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_GaugeW);

}  // namespace

BENCHMARK_MAIN();
