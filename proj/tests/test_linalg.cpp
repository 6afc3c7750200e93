#include <doctest.h>

#include <map>
#include <random>

#include "klr/kernels.hpp"
#include "klr/linalg.hpp"

using namespace klr;

namespace {

SparseVec random_row(std::mt19937& rng, int ncols, int nnz) {
  std::map<int, Rational> m;
  std::uniform_int_distribution<int> col(0, ncols - 1), val(-3, 3);
  for (int k = 0; k < nnz; ++k) m[col(rng)] += Rational(val(rng), 1 + (k % 2));
  SparseVec v;
  for (auto& [c, x] : m)
    if (sgn(x) != 0) v.emplace_back(c, x);
  return v;
}

// dense Gaussian elimination, independent of the sparse code
int dense_rank(const std::vector<SparseVec>& rows, int ncols) {
  std::vector<std::vector<Rational>> a;
  for (auto& r : rows) {
    std::vector<Rational> d(ncols);
    for (auto& [c, x] : r) d[c] = x;
    a.push_back(d);
  }
  int rank = 0;
  for (int c = 0; c < ncols && rank < static_cast<int>(a.size()); ++c) {
    int p = -1;
    for (int r = rank; r < static_cast<int>(a.size()); ++r)
      if (sgn(a[r][c]) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[rank]);
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (int k = 0; k < ncols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("sparse arithmetic") {
  SparseVec a{{0, 1}, {3, 2}};
  SparseVec b{{3, 1}, {5, 4}};
  auto c = sparse_add(a, b, -2);
  CHECK(c == SparseVec{{0, 1}, {5, -8}});
  CHECK(sparse_get(c, 5) == -8);
  CHECK(sparse_get(c, 3) == 0);
  CHECK(sparse_scale(a, 0).empty());
}

TEST_CASE("echelon rank matches dense elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int ncols = 4 + trial % 9;
    std::vector<SparseVec> rows;
    for (int k = 0; k < ncols + 3; ++k) rows.push_back(random_row(rng, ncols, 1 + k % 4));
    CHECK(rank_of(rows, ncols) == dense_rank(rows, ncols));
  }
}

TEST_CASE("kernel vectors are annihilated and complete") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int ncols = 6 + trial % 5;
    std::vector<SparseVec> rows;
    for (int k = 0; k < 4; ++k) rows.push_back(random_row(rng, ncols, 3));
    auto ker = kernel_of(rows, ncols);
    CHECK(static_cast<int>(ker.size()) == ncols - rank_of(rows, ncols));
    for (auto& v : ker)
      for (auto& r : rows) {
        Rational dot = 0;
        for (auto& [c, x] : r) dot += x * sparse_get(v, c);
        CHECK(sgn(dot) == 0);
      }
    CHECK(rank_of(ker, ncols) == static_cast<int>(ker.size()));
  }
}

TEST_CASE("reduce is the normal form modulo the span") {
  std::mt19937 rng(3);
  Echelon e(10);
  std::vector<SparseVec> rows;
  for (int k = 0; k < 5; ++k) {
    rows.push_back(random_row(rng, 10, 4));
    e.insert(rows.back());
  }
  for (auto& r : rows) CHECK(e.reduce(r).empty());
  auto v = random_row(rng, 10, 6);
  auto w = sparse_add(v, sparse_add(rows[1], rows[3], Rational(-5, 2)), 3);
  CHECK(e.reduce(v) == e.reduce(w));
  for (auto& [c, x] : e.reduce(v)) CHECK(!e.is_pivot(c));
}

TEST_CASE("parallel batch kernels agree with the serial reference") {
  std::mt19937 rng(5);
  std::vector<SparseVec> rows;
  for (int k = 0; k < 900; ++k) rows.push_back(random_row(rng, 400, 5));
  Echelon a(400), b(400);
  int ra = serial::extend_basis(a, rows);
  set_workers(4);
  int rb = omp::extend_basis(b, rows);
  set_workers(1);
  CHECK(ra == rb);
  CHECK(a.rows() == b.rows());
  auto probe = std::vector<SparseVec>(rows.begin(), rows.begin() + 50);
  CHECK(serial::reduce_batch(a, probe) == omp::reduce_batch(b, probe));
}
