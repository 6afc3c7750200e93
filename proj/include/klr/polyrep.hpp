#pragma once

#include <array>
#include <map>
#include <string>

#include "klr/klr_algebra.hpp"

namespace klr {

// Polynomial in x_1..x_n and h with rational coefficients; slot kMaxStrands holds h.
class MultiPoly {
 public:
  using Key = std::array<int, kMaxStrands + 1>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(int k);
  static MultiPoly h();

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const { return MultiPoly(*this) += o; }
  MultiPoly operator-(const MultiPoly& o) const { return MultiPoly(*this) -= o; }
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;
  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, Rational>& terms() const { return t_; }
  void add(const Key& k, const Rational& c);

  MultiPoly swap_vars(int a, int b) const;
  // (f - s_k f) / (x_k - x_{k+1})
  MultiPoly divided_difference(int k) const;
  MultiPoly set_h(const Rational& h) const;
  std::string to_string() const;

 private:
  std::map<Key, Rational> t_;
};

// f e(i): a sum over words of polynomials
using LabeledPoly = std::map<int, MultiPoly>;

// The faithful action of R_nu on the sum over words of Q[x_1..x_n] (and h when deformed).
class PolynomialRep {
 public:
  PolynomialRep(const Quiver& q, const RootVector& nu, bool deformed = false);

  LabeledPoly crossing(int k, const LabeledPoly& f) const;
  LabeledPoly dot(int p, const LabeledPoly& f) const;
  LabeledPoly idempotent(int word, const LabeledPoly& f) const;
  LabeledPoly apply(const Generator& g, const LabeledPoly& f) const;
  LabeledPoly apply(const std::vector<Generator>& product, const LabeledPoly& f) const;

  template <class C>
  LabeledPoly apply(const KLRAlgebra<C>& alg, const KLRElement<C>& x, const LabeledPoly& f) const;

  int nwords() const { return static_cast<int>(words_.size()); }
  const std::vector<Word>& words() const { return words_; }

 private:
  MultiPoly factor(int a, int b, int k) const;  // crossing factor at strands k, k+1

  Quiver quiver_;
  RootVector nu_;
  bool deformed_;
  int n_;
  std::vector<Word> words_;
  std::map<Word, int> lookup_;
};

bool labeled_equal(const LabeledPoly& a, const LabeledPoly& b);
LabeledPoly labeled_add(const LabeledPoly& a, const LabeledPoly& b, const Rational& c = 1);

}  // namespace klr
