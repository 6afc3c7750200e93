#pragma once

#include <string>
#include <vector>

#include "klr/klr_algebra.hpp"
#include "klr/polyrep.hpp"

namespace klr {

template <class C>
struct RelationTerm {
  C coeff;
  std::vector<Generator> product;
};

template <class C>
struct Relation {
  std::string name;
  std::vector<RelationTerm<C>> terms;  // the relation says the sum vanishes
};

// every defining relation with every admissible bottom word of the content
template <class C>
std::vector<Relation<C>> defining_relations(const KLRAlgebra<C>& alg);

struct RelationReport {
  int relations = 0;
  int rewriting_failures = 0;
  int representation_failures = 0;
  int cross_checks = 0;
  int cross_failures = 0;
  std::vector<std::string> messages;
  bool ok() const { return rewriting_failures == 0 && representation_failures == 0 && cross_failures == 0; }
};

// Checks each relation by straightening and, independently, in the polynomial
// representation; then compares straightened random products with the
// representation applied generator by generator.
template <class C>
RelationReport check_relations(KLRAlgebra<C>& alg, int random_products = 12, unsigned seed = 1);

MultiPoly to_multipoly(const Rational& c);
MultiPoly to_multipoly(const HPoly& c);
std::vector<LabeledPoly> test_vectors(const RootVector& nu, int max_degree);

}  // namespace klr
