#include "klr/linalg.hpp"

#include <algorithm>
#include <map>

namespace klr {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& c) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, b[j].second * c);
      ++j;
    } else {
      Rational v = a[i].second + b[j].second * c;
      if (sgn(v) != 0) r.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& c) {
  SparseVec r;
  if (sgn(c) == 0) return r;
  r.reserve(a.size());
  for (auto& [k, v] : a) r.emplace_back(k, v * c);
  return r;
}

Rational sparse_get(const SparseVec& a, int col) {
  auto it = std::lower_bound(a.begin(), a.end(), col, [](const auto& e, int c) { return e.first < c; });
  if (it != a.end() && it->first == col) return it->second;
  return 0;
}

std::vector<int> Echelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ncols(); ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  // rows are reduced against each other, so one subtraction per pivot column of v suffices
  bool hit = false;
  for (auto& [c, x] : v)
    if (pivot_row_[c] >= 0) {
      hit = true;
      break;
    }
  if (!hit) return v;
  std::map<int, Rational> acc;
  for (auto& [c, x] : v)
    if (pivot_row_[c] < 0) acc[c] += x;
  for (auto& [c, x] : v) {
    int r = pivot_row_[c];
    if (r < 0) continue;
    for (auto& [c2, y] : rows_[r]) {
      if (c2 == c) continue;
      acc[c2] -= x * y;
    }
  }
  SparseVec out;
  for (auto& [c, x] : acc)
    if (sgn(x) != 0) out.emplace_back(c, x);
  return out;
}

bool Echelon::insert(const SparseVec& v) { return insert_reduced(reduce(v)); }

bool Echelon::insert_reduced(SparseVec r) {
  if (r.empty()) return false;
  const int p = r.back().first;
  Rational inv = 1 / r.back().second;
  if (inv != 1)
    for (auto& e : r) e.second *= inv;
  for (auto& row : rows_) {
    Rational x = sparse_get(row, p);
    if (sgn(x) != 0) row = sparse_add(row, r, -x);
  }
  pivot_row_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVec> Echelon::kernel() const {
  std::vector<SparseVec> out;
  // column f free: x_f = 1, x_pivot(r) = -r[f]
  std::vector<std::vector<std::pair<int, Rational>>> by_col(ncols());
  for (const auto& row : rows_) {
    int p = row.back().first;
    for (auto& [c, x] : row)
      if (c != p) by_col[c].emplace_back(p, -x);
  }
  for (int f = 0; f < ncols(); ++f) {
    if (pivot_row_[f] >= 0) continue;
    SparseVec v = by_col[f];
    v.emplace_back(f, 1);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

PreimageSolver::PreimageSolver(const std::vector<SparseVec>& columns, int target_dim)
    : n_(static_cast<int>(columns.size())), ech_(n_ + target_dim) {
  // unknown k sits in column k, target coordinate t in column n + t; pivots are
  // the largest column, so they land in the target part whenever possible
  for (int k = 0; k < n_; ++k) {
    SparseVec row{{k, 1}};
    for (auto& [t, x] : columns[k]) row.emplace_back(n_ + t, x);
    SparseVec r = ech_.reduce(row);
    if (!r.empty() && r.back().first < n_) ++kernel_dim_;
    ech_.insert_reduced(std::move(r));
  }
}

std::optional<SparseVec> PreimageSolver::preimage(const SparseVec& w) const {
  SparseVec shifted;
  for (auto& [t, x] : w) shifted.emplace_back(n_ + t, x);
  SparseVec r = ech_.reduce(shifted);
  SparseVec out;
  for (auto& [c, x] : r) {
    if (c >= n_) return std::nullopt;
    out.emplace_back(c, -x);
  }
  return out;
}

void LinearSystem::add(const SparseVec& lhs, const Rational& rhs) {
  // the constant sits in column 0 so that it is never chosen as a pivot while unknowns remain
  SparseVec row;
  if (sgn(rhs) != 0) row.emplace_back(0, -rhs);
  for (auto& [k, a] : lhs) row.emplace_back(k + 1, a);
  ech_.insert(row);
}

int LinearSystem::freedom() const {
  int pivots = 0;
  for (int k = 1; k <= n_; ++k) pivots += ech_.is_pivot(k);
  return n_ - pivots;
}

SparseVec LinearSystem::solution() const {
  SparseVec out;
  for (int k = 1; k <= n_; ++k) {
    if (!ech_.is_pivot(k)) continue;
    Rational c = sparse_get(ech_.rows()[ech_.pivot_row(k)], 0);
    if (sgn(c) != 0) out.emplace_back(k - 1, -c);
  }
  return out;
}

int rank_of(const std::vector<SparseVec>& rows, int ncols) {
  Echelon e(ncols);
  for (auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& rows, int ncols) {
  Echelon e(ncols);
  for (auto& r : rows) e.insert(r);
  return e.kernel();
}

}  // namespace klr
