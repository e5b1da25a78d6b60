#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "pniep/pniep.hpp"

using pniep::Complex;

namespace {

// n-1 values on a circle in the left half-plane plus a dominant Perron value.
pniep::Spectrum sample(std::size_t n) {
  std::vector<Complex> v{static_cast<double>(2 * n)};
  while (v.size() + 1 < n) {
    const double k = static_cast<double>(v.size());
    v.emplace_back(-1.0 - 0.1 * k, 1.0 + 0.2 * k);
    v.emplace_back(-1.0 - 0.1 * k, -1.0 - 0.2 * k);
  }
  if (v.size() < n) v.emplace_back(-1.0);
  return pniep::Spectrum(v);
}

void BM_CharPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  pniep::Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<double>((3 * i + 7 * j) % 11) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(pniep::char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_Roots(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const pniep::MonicPolynomial p = pniep::poly_from_roots(sample(n));
  for (auto _ : state) benchmark::DoNotOptimize(pniep::roots(p));
}
BENCHMARK(BM_Roots)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_CheckAll(benchmark::State& state) {
  const pniep::Spectrum spec{4, 1, -3, Complex(-1, 3), Complex(-1, -3)};
  for (auto _ : state) benchmark::DoNotOptimize(pniep::check_all(spec));
}
BENCHMARK(BM_CheckAll);

void BM_RealizeAuto(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const pniep::Spectrum spec = n == 5 ? pniep::Spectrum{6, -5, 1, Complex(-1, 4), Complex(-1, -4)}
                                      : sample(n);
  for (auto _ : state) benchmark::DoNotOptimize(pniep::realize_auto(spec));
}
BENCHMARK(BM_RealizeAuto)->Arg(5)->Arg(8)->Arg(10);

void BM_FourFeasible(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pniep::four_imag_feasible(4, -2, -1));
}
BENCHMARK(BM_FourFeasible);

}  // namespace

BENCHMARK_MAIN();
