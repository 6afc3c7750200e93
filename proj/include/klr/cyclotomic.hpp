#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/klr_algebra.hpp"
#include "klr/laurent.hpp"
#include "klr/linalg.hpp"
#include "klr/root_data.hpp"

namespace klr {

class UncertifiedBuild : public std::runtime_error {
 public:
  UncertifiedBuild(const std::string& what, int degree) : std::runtime_error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

struct BuildOptions {
  std::optional<int> degree_cap;
};

// The cyclotomic quotient R^lambda_nu = R_nu / <y_1^{lambda^{i_1}} e(i)>, built
// block by block and degree by degree. The basis consists of monomials: in
// each (top word, bottom word, degree) space, the ideal is kept in reduced
// echelon form and the monomials outside its pivots represent the quotient.
// Elements of the quotient are KLR elements supported on those monomials.
class CyclotomicAlgebra {
 public:
  using Element = KLRElement<Rational>;

  CyclotomicAlgebra(const Quiver& q, Weight lambda, RootVector nu, const BuildOptions& opt = {});

  const Quiver& quiver() const { return klr_->quiver(); }
  const Weight& lambda() const { return lambda_; }
  const RootVector& content() const { return nu_; }
  Weight weight() const;  // mu = lambda - nu
  RationalKLR& klr() const { return *klr_; }
  int nwords() const { return klr_->nwords(); }
  int strands() const { return klr_->strands(); }
  bool certified() const { return true; }  // construction throws otherwise

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  int basis_index(const Monomial& m) const;
  int degree(const Monomial& m) const { return klr_->degree(m); }
  Laurent hilbert_series() const;
  Laurent block_series(int top, int bottom) const;
  Laurent oracle_series() const;
  int top_degree() const { return top_degree_; }

  Element project(const Element& x) const;
  Element mul(const Element& a, const Element& b) const;
  Element unit() const { return project(klr_->unit()); }
  Element idempotent(int word) const { return project(klr_->idempotent(word)); }
  Element dot(int p) const;       // y_p summed over all words
  Element crossing(int k) const;  // psi_k summed over all words
  Element basis_element(int idx) const { return Element(basis_[idx], 1); }
  // generating set: idempotents, dots and crossings
  std::vector<Element> generators() const;

  SparseVec to_vector(const Element& x) const;
  Element from_vector(const SparseVec& v) const;

  // smallest N with y_p^N = 0, one entry per strand
  std::vector<int> nilpotency_orders() const;

 private:
  struct Space {
    std::vector<Monomial> cols;
    std::map<Monomial, int> index;
    Echelon ideal;
    std::vector<int> free;
  };
  struct Block {
    int top = 0, bottom = 0;
    int first = 0, last = -1;  // degrees with computed spaces
    Laurent oracle;
    std::map<int, Space> spaces;
  };

  bool killed(const Monomial& m) const;
  Space& space(Block& b, int d);
  void build(const BuildOptions& opt);

  Weight lambda_;
  RootVector nu_;
  std::unique_ptr<RationalKLR> klr_;
  std::vector<Block> blocks_;  // indexed top * nwords + bottom
  std::vector<Monomial> basis_;
  std::map<Monomial, int> basis_lookup_;
  int top_degree_ = 0;
};

// products of basis elements with generators (and of all basis pairs when full
// is set) in the deformed algebra, specialized at h = 0 and projected, compared
// with the undeformed products
struct DeformationReport {
  long compared = 0;
  long mismatches = 0;
  std::string first_mismatch;
  bool ok() const { return mismatches == 0; }
};
DeformationReport compare_deformed(const CyclotomicAlgebra& a, bool full);

// a*(b*c) = (a*b)*c over basis triples (all of them when exhaustive, else a random sample)
bool check_associativity(const CyclotomicAlgebra& a, bool exhaustive, int samples = 200, unsigned seed = 1);

}  // namespace klr
