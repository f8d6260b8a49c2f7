// Microbenchmarks for the hot paths: the Hermitian eigensolver, single
// support evaluations, full region sweeps, the truncation ladder and Haar
// orbit sampling.

#include <benchmark/benchmark.h>

#include <complex>
#include <cstddef>
#include <vector>

#include "ocnr/catalog.hpp"
#include "ocnr/closure.hpp"
#include "ocnr/matrix.hpp"
#include "ocnr/oracle.hpp"
#include "ocnr/range.hpp"
#include "ocnr/spectrum.hpp"

namespace {

using namespace ocnr;

ComplexMatrix dense_hermitian(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = 1.0 / static_cast<double>(i + j + 1);
      const double im = (i == j) ? 0.0 : 0.1 * static_cast<double>(i) - 0.1 * static_cast<double>(j);
      m(i, j) = {re, im};
    }
  }
  return hermitian_part(m);
}

void bm_hermitian_eigen(benchmark::State& state) {
  const ComplexMatrix m = dense_hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}

void bm_support(benchmark::State& state) {
  const CatalogEntry& entry = catalog_entry("geometric-drift");
  double theta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(support(entry.model, entry.spectrum, theta));
    theta += 1e-3;
  }
}

void bm_region(benchmark::State& state) {
  const CatalogEntry& entry = catalog_entry("mixed-block-clusters");
  RangeOptions opt;
  opt.grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(region(entry.model, entry.spectrum, opt));
}

void bm_closure_rhs(benchmark::State& state) {
  const CatalogEntry& entry = catalog_entry("geometric-drift");
  ClosureOptions opt;
  opt.grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closure_rhs(entry.model, entry.spectrum, opt));
}

void bm_haar_cloud(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  ComplexMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) a(i, i) = {1.0 / static_cast<double>(i + 1), 0.2};
  std::vector<double> c(dim, 0.0);
  c[0] = 2.0;
  if (dim > 1) c[1] = 1.0;
  const FiniteInstance inst{a, c};
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(haar_orbit_cloud(inst, 1000, seed++));
}

void bm_greedy_interpolant(benchmark::State& state) {
  const SpectrumSeq c({2.0, 1.5, 1.0, 0.5}, GeometricTail{0.4, 0.6});
  const SpectrumSeq x({1.9, 1.4, 0.9});
  for (auto _ : state) benchmark::DoNotOptimize(greedy_interpolant(x, c));
}

BENCHMARK(bm_hermitian_eigen)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_support);
BENCHMARK(bm_region)->Arg(180)->Arg(720);
BENCHMARK(bm_closure_rhs)->Arg(180);
BENCHMARK(bm_haar_cloud)->Arg(4)->Arg(8);
BENCHMARK(bm_greedy_interpolant);

}  // namespace

BENCHMARK_MAIN();
