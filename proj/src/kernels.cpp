#include "klr/kernels.hpp"

#include <omp.h>

#include <atomic>

namespace klr {

namespace {
std::atomic<int> g_workers{1};
}

void set_workers(int n) { g_workers = n < 1 ? 1 : n; }
int workers() { return g_workers; }

namespace serial {

std::vector<SparseVec> reduce_batch(const Echelon& basis, const std::vector<SparseVec>& rows) {
  std::vector<SparseVec> out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) out[i] = basis.reduce(rows[i]);
  return out;
}

int extend_basis(Echelon& basis, const std::vector<SparseVec>& rows) {
  int added = 0;
  for (const auto& r : rows) added += basis.insert(r);
  return added;
}

}  // namespace serial

namespace omp {

std::vector<SparseVec> reduce_batch(const Echelon& basis, const std::vector<SparseVec>& rows) {
  std::vector<SparseVec> out(rows.size());
  const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers())
  for (long i = 0; i < n; ++i) out[i] = basis.reduce(rows[i]);
  return out;
}

int extend_basis(Echelon& basis, const std::vector<SparseVec>& rows) {
  // reduce against the current basis in parallel, then merge in input order;
  // the merge re-reduces against rows added earlier in this batch
  constexpr size_t kChunk = 256;
  int added = 0;
  for (size_t start = 0; start < rows.size(); start += kChunk) {
    size_t end = std::min(rows.size(), start + kChunk);
    std::vector<SparseVec> chunk(rows.begin() + start, rows.begin() + end);
    auto reduced = reduce_batch(basis, chunk);
    for (auto& r : reduced)
      if (!r.empty()) added += basis.insert(r);
  }
  return added;
}

}  // namespace omp

int extend_basis(Echelon& basis, const std::vector<SparseVec>& rows) {
  return workers() > 1 ? omp::extend_basis(basis, rows) : serial::extend_basis(basis, rows);
}

}  // namespace klr
