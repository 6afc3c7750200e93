#pragma once

#include <vector>

#include "klr/linalg.hpp"

namespace klr {

// Batch kernels. The serial versions are the reference implementation; the
// OpenMP versions must produce identical output for any thread count.
namespace serial {
std::vector<SparseVec> reduce_batch(const Echelon& basis, const std::vector<SparseVec>& rows);
int extend_basis(Echelon& basis, const std::vector<SparseVec>& rows);
}  // namespace serial

namespace omp {
std::vector<SparseVec> reduce_batch(const Echelon& basis, const std::vector<SparseVec>& rows);
int extend_basis(Echelon& basis, const std::vector<SparseVec>& rows);
}  // namespace omp

// dispatches to the OpenMP kernels when more than one worker is configured
int extend_basis(Echelon& basis, const std::vector<SparseVec>& rows);
void set_workers(int n);
int workers();

}  // namespace klr
