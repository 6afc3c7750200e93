#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/bimodule.hpp"
#include "klr/center.hpp"
#include "klr/cyclotomic.hpp"
#include "klr/root_data.hpp"
#include "klr/shapovalov.hpp"

namespace klr {

class AdjunctionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adjunctions between A = R^lambda_nu and A' = R^lambda_{nu + a_i}, with
// F = A'e and E = eA', e the sum of e(j i). The obvious adjunction F -| E has
// unit a -> iota(a) and counit x (x) y -> xy. The other adjunction E -| F is
// read off from the inverse of the sigma map:
//   mu^i > 0:  FE 1_mu (+) A^{mu^i} -> eA'e,  counit = last dotted component
//   mu^i <= 0: A'e (x)_A eA' -> EF 1_{mu - a_i} (+) A'^{2 - mu^i},  unit = preimage of the last one
// Both structure maps are stored untwisted.
class Adjunction {
 public:
  using Element = CyclotomicAlgebra::Element;
  struct Term {
    Rational coeff;
    int left;   // basis index of A' in A'e
    int right;  // basis index of A' in eA'
  };
  struct Report {
    bool sigma_route_dots = false;  // true for mu^i > 0
    int sigma_domain = 0;
    int sigma_target = 0;
    int f_dim = 0;   // A'e
    int e_dim = 0;   // eA'
    int ef_dim = 0;  // eA'e
    int fe_dim = 0;  // A'e (x)_A eA'
    bool zigzag_f = true;
    bool zigzag_e = true;
    bool bilinear = true;
    bool unit_central = true;
    bool ok() const { return zigzag_f && zigzag_e && bilinear && unit_central; }
  };

  // base = R_nu, ext = R_{nu + a_i}, minus = R_{nu - a_i}, plus2 = R_{nu + 2 a_i};
  // null stands for a zero algebra
  Adjunction(RootVector nu, int vertex, const CyclotomicAlgebra* base, const CyclotomicAlgebra* ext,
             const CyclotomicAlgebra* minus, const CyclotomicAlgebra* plus2);

  bool trivial() const { return !emb_; }
  int vertex() const { return vertex_; }
  int pairing() const { return pairing_; }  // mu^i for the weight of the base
  const CyclotomicAlgebra& base() const { return *base_; }
  const CyclotomicAlgebra& ext() const { return *ext_; }
  const Embedding& embedding() const { return *emb_; }
  const Element& idempotent() const { return emb_->idempotent(); }
  const Report& report() const { return report_; }
  int unit_degree() const { return 2 * pairing_ - 2; }

  // eA'e -> A
  Element counit(const Element& z) const;
  const std::vector<Term>& unit_terms() const { return unit_; }
  // (-1)^{beta(Pi(mu), a_i)} with Pi(mu) = mu - lambda
  int twist(const BetaForm& beta) const;

 private:
  void build_dots_route(const CyclotomicAlgebra* minus);
  void build_crossing_route(const CyclotomicAlgebra* plus2, const TensorSpace& p);
  void solve_unit(const TensorSpace& p);
  void solve_counit(const TensorSpace& p);
  void verify(const TensorSpace& p);
  bool in_ef(int idx) const;
  Element symbol(int idx) const { return ext_->basis_element(idx); }

  const CyclotomicAlgebra* base_;
  const CyclotomicAlgebra* ext_;
  int vertex_;
  int pairing_ = 0;
  RootVector content_;
  std::unique_ptr<Embedding> emb_;
  std::vector<Element> counit_;  // per basis index of A'; empty outside eA'e
  std::vector<Term> unit_;
  Report report_;
};

// All cyclotomic quotients R^lambda_nu with nonzero weight space, their centers
// and the adjunctions between neighbours.
class WeightFamily {
 public:
  WeightFamily(const Quiver& q, Weight lambda, const BuildOptions& opt = {});
  WeightFamily(const WeightFamily&) = delete;
  WeightFamily& operator=(const WeightFamily&) = delete;

  const Quiver& quiver() const { return quiver_; }
  const Weight& lambda() const { return lambda_; }
  const std::vector<RootVector>& support() const { return support_; }
  bool in_support(const RootVector& nu) const;
  // null outside the support
  const CyclotomicAlgebra* algebra(const RootVector& nu);
  const CyclotomicView& view(const RootVector& nu);
  const CenterBasis& center(const RootVector& nu);
  const Adjunction& adjunction(const RootVector& nu, int i);
  Weight weight(const RootVector& nu) const { return quiver_.weight_of(lambda_, nu); }

 private:
  Quiver quiver_;
  Weight lambda_;
  BuildOptions opt_;
  std::vector<RootVector> support_;
  std::map<RootVector, std::unique_ptr<CyclotomicAlgebra>> algebras_;
  std::map<RootVector, std::unique_ptr<CyclotomicView>> views_;
  std::map<RootVector, CenterBasis> centers_;
  std::map<std::pair<RootVector, int>, std::unique_ptr<Adjunction>> adjunctions_;
};

RootVector shifted(const RootVector& nu, int i, int by = 1);

// Linear operators on the direct sum of the centers, in coordinates relative to
// the center bases; column k is the image of global basis vector k.
using Operator = std::vector<SparseVec>;

Operator compose(const Operator& a, const Operator& b);  // a after b
Operator combine(const Operator& a, const Operator& b, const Rational& c = 1);  // a + c b
Operator scalar_operator(int dim, const Rational& c);
bool same_operator(const Operator& a, const Operator& b);

// The current algebra acting on the direct sum of the centers by bubble convolution.
class CurrentAction {
 public:
  CurrentAction(WeightFamily& fam, const BetaForm& beta);

  int dim() const { return dim_; }
  const std::vector<RootVector>& weights() const { return fam_.support(); }
  int offset(const RootVector& nu) const { return offsets_.at(nu); }
  // global index -> (content, position in its center basis)
  std::pair<RootVector, int> locate(int k) const;
  int degree_of(int k) const;

  // x^-_{i,r}: Z(R_nu) -> Z(R_{nu + a_i}) and x^+_{i,r}: Z(R_nu) -> Z(R_{nu - a_i})
  const Operator& x_minus(int i, int r);
  const Operator& x_plus(int i, int r);
  // [x^+_{i,r}, x^-_{i,0}]
  Operator xi(int i, int r);

  // the raw maps on elements of the algebras
  CyclotomicAlgebra::Element apply_minus(const RootVector& nu, int i, int r, const CyclotomicAlgebra::Element& z);
  CyclotomicAlgebra::Element apply_plus(const RootVector& nu, int i, int r, const CyclotomicAlgebra::Element& z);

  // every output so far landed in the center
  bool outputs_central() const { return noncentral_.empty(); }
  const std::vector<std::string>& noncentral() const { return noncentral_; }
  // the identity vector of each weight space
  std::vector<int> identity_indices();
  int weight_pairing(const RootVector& nu, int i) const;  // mu^i
  int cartan(int i, int j) const;
  std::string quiver_name(int i) const;

 private:
  Operator build(int i, int r, bool plus);

  WeightFamily& fam_;
  BetaForm beta_;
  int dim_ = 0;
  std::map<RootVector, int> offsets_;
  std::map<std::pair<int, int>, Operator> minus_, plus_;
  std::vector<std::string> noncentral_;
};

struct RelationCheck {
  std::string name;
  bool ok = true;
  std::string witness;  // first violation
};

struct CurrentReport {
  std::vector<RelationCheck> checks;
  bool generated = false;
  int span_dim = 0;
  int total_dim = 0;
  bool ok() const;
};

struct RelationOptions {
  int max_r = 2;  // dot orders in the x^+/x^- and xi relations
  int serre_r = 1;
  int generation_r = -1;  // -1: enough to reach the top degree
};

CurrentReport verify_current_relations(CurrentAction& act, const RelationOptions& opt = {});
// closure of the identities under all x^{+-}_{i,r} with r <= max_r; returns the span dimension
int generated_dimension(CurrentAction& act, int max_r);

// Double duals of the dot on F_i and of the crossing F_jF_i -> F_iF_j, computed with
// the obvious adjunction on one side and the twisted E -| F adjunction on the other.
struct DoubleDual {
  std::string what;  // "y" or "psi"
  RootVector nu;
  int i = 0;
  int j = 0;
  int untwisted_sign = 0;  // f** = s f, 0 if not a multiple
  int twist = 1;           // product of the twist scalars involved
  int sign() const { return untwisted_sign * twist; }
  bool cyclic() const { return sign() == 1; }
};

struct CyclicityReport {
  std::vector<DoubleDual> entries;
  bool ok() const;
};

CyclicityReport check_cyclicity(WeightFamily& fam, const BetaForm& beta);

}  // namespace klr
