#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/center.hpp"
#include "klr/cyclotomic.hpp"
#include "klr/laurent.hpp"

namespace klr {

// polynomial in generators c_1..c_m, keyed by exponent vectors
class GenPoly {
 public:
  using Exps = std::vector<int>;
  GenPoly() = default;
  explicit GenPoly(int ngens) : ngens_(ngens) {}
  static GenPoly constant(int ngens, const Rational& c);
  static GenPoly generator(int ngens, int i);

  GenPoly& operator+=(const GenPoly& o);
  GenPoly operator+(const GenPoly& o) const { return GenPoly(*this) += o; }
  GenPoly operator*(const GenPoly& o) const;
  GenPoly scaled(const Rational& c) const;
  bool operator==(const GenPoly& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  void add(const Exps& e, const Rational& c);
  int ngens() const { return ngens_; }
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int ngens_ = 0;
  std::map<Exps, Rational> terms_;
};

// Q[c_1..c_m] / (relations), with c_j of degree gen_degrees[j]; degreewise basis
// of quotient monomials computed by exact linear algebra
class GradedRingPresentation {
 public:
  GradedRingPresentation(std::vector<int> gen_degrees, std::vector<GenPoly> relations, std::vector<std::string> names);

  int ngens() const { return static_cast<int>(gen_degrees_.size()); }
  const std::vector<int>& gen_degrees() const { return gen_degrees_; }
  const std::vector<GenPoly>& relations() const { return relations_; }
  const std::vector<std::string>& names() const { return names_; }
  int degree(const GenPoly::Exps& e) const;

  // quotient monomials by degree; the quotient is zero in every other degree
  const std::map<int, std::vector<GenPoly::Exps>>& basis() const { return basis_; }
  Laurent hilbert_series() const;
  int dim() const;
  GenPoly normal_form(const GenPoly& p) const;

 private:
  struct Space {
    std::vector<GenPoly::Exps> cols;
    std::map<GenPoly::Exps, int> index;
    Echelon ideal;
  };
  std::vector<GenPoly::Exps> monomials(int d) const;
  void build();

  std::vector<int> gen_degrees_;
  std::vector<GenPoly> relations_;
  std::vector<std::string> names_;
  std::map<int, Space> spaces_;
  std::map<int, std::vector<GenPoly::Exps>> basis_;
  int last_ = 0;
};

// h_m in terms of the elementary classes c_1..c_k
GenPoly complete_homogeneous(int k, int m);
GradedRingPresentation grassmannian_presentation(int k, int n);

// c_{i,k} for vertex i and 1 <= k <= nu_i
struct ChernClass {
  int vertex;
  int k;
};
std::vector<ChernClass> chern_generators(const RootVector& nu);
std::vector<std::string> chern_names(const Quiver& q, const RootVector& nu);

// rho: the degree k elementary symmetric polynomial in the dots on the strands
// labelled i, summed over all words
KLRElement<Rational> rho(RationalKLR& alg, const ChernClass& c);
// checks that rho(c) commutes with every generator of R_nu
bool rho_central(RationalKLR& alg, const KLRElement<Rational>& x);

// a ring map from a presentation to a finite-dimensional algebra, given by generator images
class GradedRingMap {
 public:
  GradedRingMap(const GradedRingPresentation& src, const FiniteAlgebra& target, std::vector<SparseVec> images);
  SparseVec evaluate(const GenPoly& p) const;
  // first relation not sent to zero, or -1
  int first_failing_relation() const;
  // images of the quotient basis in degree d
  std::vector<SparseVec> basis_images(int d) const;

 private:
  const GradedRingPresentation& src_;
  const FiniteAlgebra& target_;
  std::vector<SparseVec> images_;
};

struct KirwanReport {
  bool images_central = false;
  bool generates = false;
  Laurent center_series;
  Laurent image_series;
  bool ok() const { return images_central && generates; }
};

// kappa_a: projections of the rho images into the cyclotomic quotient
std::vector<SparseVec> kappa_a(const CyclotomicAlgebra& a);
// the subalgebra generated by the kappa_a images is the whole center
KirwanReport kirwan_check(const CyclotomicAlgebra& a, const CenterBasis& z);
// subalgebra generated by the given elements together with the unit
Echelon generated_subalgebra(const FiniteAlgebra& a, const std::vector<SparseVec>& gens);

struct PhiReport {
  int k = 0, n = 0;
  bool well_defined = false;
  bool dims_match = false;
  bool bijective = false;
  bool injective = false;
  bool square_commutes = false;
  Laurent cohomology;
  Laurent center;
  std::string witness;
  bool ok() const { return well_defined && dims_match && bijective && square_commutes; }
};

// sl2 family: H^*(Gr(k, n)) -> Z(R^{n Lambda}_{k alpha}) with c_j -> e_j(y)
PhiReport phi_check(int k, int n);
PhiReport phi_check(const CyclotomicAlgebra& a, const CenterBasis& z);

}  // namespace klr
