#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klr/cyclotomic.hpp"
#include "klr/linalg.hpp"

namespace klr {

// The map R^lambda_nu -> R^lambda_{nu + a_i} adding a vertical strand labelled i
// on the right.
class Embedding {
 public:
  using Element = CyclotomicAlgebra::Element;
  Embedding(const CyclotomicAlgebra& from, const CyclotomicAlgebra& to, int vertex);

  Element operator()(const Element& x) const;
  const CyclotomicAlgebra& source() const { return from_; }
  const CyclotomicAlgebra& target() const { return to_; }
  int vertex() const { return vertex_; }
  // sum of e(j i) over the words j of the source content
  const Element& idempotent() const { return idem_; }

 private:
  const CyclotomicAlgebra& from_;
  const CyclotomicAlgebra& to_;
  int vertex_;
  std::vector<Element> images_;  // per source basis index
  Element idem_;
};

// B e (x)_M e B where M sits inside e B e through an embedding and e is its
// image of the unit. Elements are vectors over pairs (x, y) of basis monomials
// of B with bottom(x) = top(y), taken modulo x g (x) y - x (x) g y for
// generators g of M.
class TensorSpace {
 public:
  using Element = CyclotomicAlgebra::Element;
  explicit TensorSpace(const Embedding& emb);

  const CyclotomicAlgebra& outer() const { return emb_.target(); }
  int naive_dim() const { return static_cast<int>(pairs_.size()); }
  int dim() const { return static_cast<int>(free_.size()); }
  const std::vector<int>& basis() const { return free_; }
  const std::pair<int, int>& pair(int idx) const { return pairs_[idx]; }  // B basis indices
  int degree(int idx) const;

  SparseVec reduce(const SparseVec& t) const { return relations_.reduce(t); }
  // x (x) y for x in B e and y in e B, reduced
  SparseVec tensor(const Element& x, const Element& y) const;
  SparseVec left_mul(const Element& b, const SparseVec& t) const;
  SparseVec right_mul(const SparseVec& t, const Element& b) const;
  // sum of f(x, y) over the terms of t
  template <class F>
  Element contract(const SparseVec& t, F f) const {
    Element r;
    for (auto& [idx, c] : t) {
      const auto& [x, y] = pairs_[idx];
      r.add_scaled(f(basis_element(x), basis_element(y)), c);
    }
    return r;
  }
  Element multiply_out(const SparseVec& t) const;

 private:
  Element basis_element(int i) const { return outer().basis_element(i); }
  SparseVec naive(const Element& x, const Element& y) const;

  const Embedding& emb_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::pair<int, int>, int> index_;
  Echelon relations_;
  std::vector<int> free_;
};

}  // namespace klr
