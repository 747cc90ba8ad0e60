#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "sigvar/matrix.hpp"
#include "sigvar/signature.hpp"
#include "sigvar/varieties.hpp"

using namespace sigvar;

namespace {

// n x n integer matrix of rank n - 8 with entries around 1e6.
IntegerMatrix low_rank_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::size_t r = n - 8;
  IntegerMatrix b(n, r), c(r, n), m(n, n, Integer(0));
  for (auto* x : {&b, &c})
    for (std::size_t i = 0; i < x->rows(); ++i)
      for (std::size_t j = 0; j < x->cols(); ++j) (*x)(i, j) = d(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += b(i, k) * c(k, j);
  return m;
}

// Quadratic monomials of the level-3 signatures of random two-step paths in
// the plane: the matrix whose kernel holds the quadrics of the image.
IntegerMatrix quadric_matrix() {
  auto f = signature_variety_map(PathFamily::piecewise_linear, 2, 3, 2);
  const std::size_t n = f.coordinate_count(), cols = monomial_count(n, 2);
  PointSampler sampler(1);
  RationalMatrix m(cols + 10, cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto v = f.eval(sampler.next(f.parameter_count()));
    std::size_t c = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) m(r, c++) = v[a] * v[b];
  }
  return clear_denominators(m);
}

void BM_RankParallel(benchmark::State& state) {
  auto m = low_rank_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_RankSerial(benchmark::State& state) {
  auto m = low_rank_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank_serial(m));
}

void BM_QuadricRankParallel(benchmark::State& state) {
  auto m = quadric_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}

void BM_QuadricRankSerial(benchmark::State& state) {
  auto m = quadric_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank_serial(m));
}

void BM_ImageDimension(benchmark::State& state) {
  auto f = signature_variety_map(PathFamily::piecewise_linear, 3, 3, 2);
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(affine_image_dimension(f, 4, 1));
  omp_set_num_threads(omp_get_num_procs());
}

void BM_SignatureLevel(benchmark::State& state) {
  auto x = pw_lin_path(RationalMatrix(3, 4, std::vector<Rational>{1, 2, -1, 3, 0, 1, 4, -2, 5, 1, 1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(sig_level(x, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_RankParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadricRankParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadricRankSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImageDimension)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignatureLevel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
