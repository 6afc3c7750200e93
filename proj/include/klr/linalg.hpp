#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "klr/coeff.hpp"

namespace klr {

// sparse row: (column, value) pairs with strictly increasing columns and nonzero values
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& c = 1);
SparseVec sparse_scale(const SparseVec& a, const Rational& c);
Rational sparse_get(const SparseVec& a, int col);

// Reduced row echelon basis of a growing subspace. Each row has its largest
// column as pivot, with coefficient 1, and no other row touches that column.
class Echelon {
 public:
  explicit Echelon(int ncols = 0) : pivot_row_(ncols, -1) {}

  int ncols() const { return static_cast<int>(pivot_row_.size()); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  int pivot_row(int col) const { return pivot_row_[col]; }
  std::vector<int> free_columns() const;

  // remainder after removing all pivot columns; the normal form modulo the span
  SparseVec reduce(const SparseVec& v) const;
  // returns true if v was independent of the current rows
  bool insert(const SparseVec& v);
  bool insert_reduced(SparseVec r);

  // kernel of the linear map whose rows were inserted, one vector per free column
  std::vector<SparseVec> kernel() const;

 private:
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_row_;
};

// Preimages under the linear map sending unknown k to columns[k]; the columns
// are vectors over [0, target_dim).
class PreimageSolver {
 public:
  PreimageSolver(const std::vector<SparseVec>& columns, int target_dim);
  int unknowns() const { return n_; }
  bool injective() const { return kernel_dim_ == 0; }
  int rank() const { return n_ - kernel_dim_; }
  // some preimage of w, or nothing when w is not in the image
  std::optional<SparseVec> preimage(const SparseVec& w) const;

 private:
  int n_;
  int kernel_dim_ = 0;
  Echelon ech_;
};

// Affine system sum_k a_k x_k = b, built one equation at a time.
class LinearSystem {
 public:
  explicit LinearSystem(int unknowns) : n_(unknowns), ech_(unknowns + 1) {}
  int unknowns() const { return n_; }
  void add(const SparseVec& lhs, const Rational& rhs);
  bool consistent() const { return !ech_.is_pivot(0); }
  // dimension of the solution set when consistent
  int freedom() const;
  // the solution with all free unknowns set to zero
  SparseVec solution() const;

 private:
  int n_;
  Echelon ech_;
};

int rank_of(const std::vector<SparseVec>& rows, int ncols);
std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& rows, int ncols);

}  // namespace klr
