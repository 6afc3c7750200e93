#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "klr/coeff.hpp"
#include "klr/perm.hpp"
#include "klr/root_data.hpp"

namespace klr {

using Exps = std::array<uint8_t, kMaxStrands>;

// psi_w y^a e(j): dots sit at the bottom, j is the bottom word, the top word is w.j
struct Monomial {
  uint16_t perm = 0;
  uint16_t word = 0;
  Exps dots{};
  auto operator<=>(const Monomial&) const = default;
};

template <class C>
class KLRElement {
 public:
  using Terms = std::map<Monomial, C>;

  KLRElement() = default;
  KLRElement(const Monomial& m, const C& c) { add(m, c); }

  void add(const Monomial& m, const C& c);
  KLRElement& operator+=(const KLRElement& o);
  KLRElement& operator-=(const KLRElement& o);
  KLRElement operator+(const KLRElement& o) const { return KLRElement(*this) += o; }
  KLRElement operator-(const KLRElement& o) const { return KLRElement(*this) -= o; }
  KLRElement scaled(const C& c) const;
  void add_scaled(const KLRElement& o, const C& c);
  bool operator==(const KLRElement& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  C coeff(const Monomial& m) const;

 private:
  Terms terms_;
};

// polynomial in the dots y_1..y_n with coefficients in C
template <class C>
using DotPoly = std::map<Exps, C>;

struct Generator {
  enum Kind { Idempotent, Dot, Crossing } kind;
  int index = 0;  // word index for idempotents, 0-based strand for dots/crossings
  int word = -1;  // bottom word for dots/crossings; -1 means summed over all words
};

// The quiver Hecke algebra R_nu with the basis psi_w y^a e(j), w running over
// lexicographically smallest reduced words. Multiplication rewrites with the
// defining relations; results of generator-times-basis-element are memoized,
// so an instance must not be shared between threads.
template <class C>
class KLRAlgebra {
 public:
  using Element = KLRElement<C>;

  KLRAlgebra(const Quiver& q, RootVector nu, bool deformed = false);

  const Quiver& quiver() const { return quiver_; }
  const RootVector& content() const { return nu_; }
  bool deformed() const { return deformed_; }
  int strands() const { return n_; }
  const SymmetricGroup& group() const { return *group_; }
  const std::vector<Word>& words() const { return words_; }
  int word_index(const Word& w) const;
  int top_word(int perm, int word) const { return top_[perm * nwords() + word]; }
  int top_word(const Monomial& m) const { return top_word(m.perm, m.word); }
  int nwords() const { return static_cast<int>(words_.size()); }

  int degree(const Monomial& m) const;
  int degree(const Element& x) const;  // throws if not homogeneous
  bool homogeneous(const Element& x) const;

  Monomial monomial(int perm, int word, const Exps& dots = {}) const;
  Element unit() const;
  Element idempotent(int word) const;
  Element generator(const Generator& g) const;

  Element straighten(const std::vector<Generator>& product);
  Element mul(const Element& a, const Element& b);
  Element mul_monomials(const Monomial& a, const Monomial& b);
  Element left_crossing(int k, const Element& x);
  Element left_dot(int p, const Element& x);
  Element left_idempotent(int word, const Element& x) const;
  Element right_dots(const Element& x, const Exps& a) const;
  Element left_poly(const DotPoly<C>& f, const Element& x);
  // normal form of psi_{l0} ... psi_{lm} e(j) for an arbitrary (not necessarily reduced) word
  Element letters_times(const Letters& l, int word);

  DotPoly<C> bigon_poly(int a, int b, int k) const;   // Q_ab(y_k, y_{k+1})
  DotPoly<C> braid_poly(const Word& below, int r) const;  // psi_{r+1}psi_r psi_{r+1} - psi_r psi_{r+1} psi_r

  // all basis monomials of a given degree in the block (top word, bottom word)
  std::vector<Monomial> block_basis(int top, int bottom, int degree) const;
  int block_min_degree(int top, int bottom) const;

  std::string monomial_to_string(const Monomial& m) const;
  std::string to_string(const Element& x) const;

  size_t memo_size() const { return crossing_memo_.size() + dot_memo_.size(); }

 private:
  const Element& crossing_memo(int k, int perm, int word);
  const Element& dot_memo(int p, int perm, int word);
  Element compute_crossing(int k, int perm, int word);
  Element compute_dot(int p, int perm, int word);
  Element reduced_word_nf(const Letters& u, int word);
  Element braid_correction(const Letters& cur, int pos, int word);
  C h_power(int e) const;
  DotPoly<C> from_q(const QPolynomial& q, int ku, int kv) const;

  Quiver quiver_;
  RootVector nu_;
  bool deformed_;
  int n_;
  std::shared_ptr<const SymmetricGroup> group_;
  std::vector<Word> words_;
  std::map<Word, int> word_lookup_;
  std::vector<int> top_;
  std::vector<int> crossing_degree_;  // degree of psi_w e(j)
  std::unordered_map<uint64_t, Element> crossing_memo_;
  std::unordered_map<uint64_t, Element> dot_memo_;
};

std::shared_ptr<const SymmetricGroup> symmetric_group(int n);

using RationalKLR = KLRAlgebra<Rational>;
using DeformedKLR = KLRAlgebra<HPoly>;

// h -> value on every coefficient
KLRElement<Rational> specialize(const KLRElement<HPoly>& x, const Rational& h);

}  // namespace klr
