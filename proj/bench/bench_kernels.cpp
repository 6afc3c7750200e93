#include <benchmark/benchmark.h>

#include <random>

#include "klr/center.hpp"
#include "klr/kernels.hpp"

using namespace klr;

namespace {

std::vector<SparseVec> random_rows(int count, int ncols, int nnz) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> col(0, ncols - 1), val(-2, 2);
  std::vector<SparseVec> rows;
  for (int k = 0; k < count; ++k) {
    SparseVec r;
    for (int t = 0; t < nnz; ++t) {
      int c = val(rng);
      if (c != 0) r = sparse_add(r, SparseVec{{col(rng), Rational(c)}});
    }
    rows.push_back(r);
  }
  return rows;
}

void BM_extend_serial(benchmark::State& state) {
  auto rows = random_rows(static_cast<int>(state.range(0)), 400, 3);
  for (auto _ : state) {
    Echelon e(400);
    benchmark::DoNotOptimize(serial::extend_basis(e, rows));
  }
}

void BM_extend_omp(benchmark::State& state) {
  auto rows = random_rows(static_cast<int>(state.range(0)), 400, 3);
  set_workers(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    Echelon e(400);
    benchmark::DoNotOptimize(omp::extend_basis(e, rows));
  }
  set_workers(1);
}

void BM_reduce_serial(benchmark::State& state) {
  auto rows = random_rows(300, 400, 3);
  auto probe = random_rows(static_cast<int>(state.range(0)), 400, 6);
  Echelon e(400);
  serial::extend_basis(e, rows);
  for (auto _ : state) benchmark::DoNotOptimize(serial::reduce_batch(e, probe));
}

void BM_reduce_omp(benchmark::State& state) {
  auto rows = random_rows(300, 400, 3);
  auto probe = random_rows(static_cast<int>(state.range(0)), 400, 6);
  Echelon e(400);
  serial::extend_basis(e, rows);
  set_workers(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(omp::reduce_batch(e, probe));
  set_workers(1);
}

// end to end: the center of R^{4 Lambda}_{2 alpha} with the given worker count
void BM_center(benchmark::State& state) {
  Quiver a1 = Quiver::type_a(1);
  CyclotomicAlgebra a(a1, {4}, {2});
  CyclotomicView view(a);
  set_workers(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(center_basis(view).dim());
  set_workers(1);
}

}  // namespace

BENCHMARK(BM_extend_serial)->Arg(300)->Arg(900);
BENCHMARK(BM_extend_omp)->Args({300, 2})->Args({900, 2})->Args({900, 4});
BENCHMARK(BM_reduce_serial)->Arg(1000);
BENCHMARK(BM_reduce_omp)->Args({1000, 2})->Args({1000, 4});
BENCHMARK(BM_center)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
