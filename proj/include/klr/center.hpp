#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "klr/cyclotomic.hpp"
#include "klr/laurent.hpp"
#include "klr/linalg.hpp"

namespace klr {

// A finite-dimensional graded algebra seen through coordinates in a fixed
// homogeneous basis.
class FiniteAlgebra {
 public:
  virtual ~FiniteAlgebra() = default;
  virtual int dim() const = 0;
  virtual int degree(int i) const = 0;
  virtual SparseVec mul(const SparseVec& a, const SparseVec& b) const = 0;
  virtual SparseVec unit() const = 0;
  virtual std::vector<SparseVec> generators() const = 0;
  // false when basis element i can never appear in a central element
  virtual bool may_be_central(int) const { return true; }

  SparseVec commutator(const SparseVec& a, const SparseVec& b) const;
  std::vector<int> degrees_present() const;
};

// structure constants stored explicitly
class GradedAlgebra : public FiniteAlgebra {
 public:
  using Product = std::function<SparseVec(int, int)>;
  GradedAlgebra(std::vector<int> degrees, const Product& product, SparseVec unit, std::vector<SparseVec> gens);

  static GradedAlgebra truncated_polynomial(int var_degree, int nilpotency);  // k[y]/(y^N)
  static GradedAlgebra matrix_algebra(int n);                                 // trivially graded

  int dim() const override { return static_cast<int>(degrees_.size()); }
  int degree(int i) const override { return degrees_[i]; }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const override;
  SparseVec unit() const override { return unit_; }
  std::vector<SparseVec> generators() const override { return gens_; }
  const SparseVec& product(int i, int j) const { return table_[i][j]; }

 private:
  std::vector<int> degrees_;
  std::vector<std::vector<SparseVec>> table_;
  SparseVec unit_;
  std::vector<SparseVec> gens_;
};

class CyclotomicView : public FiniteAlgebra {
 public:
  explicit CyclotomicView(const CyclotomicAlgebra& a);
  int dim() const override { return a_.dim(); }
  int degree(int i) const override { return a_.degree(a_.basis()[i]); }
  SparseVec mul(const SparseVec& x, const SparseVec& y) const override;
  SparseVec unit() const override { return unit_; }
  std::vector<SparseVec> generators() const override { return gens_; }
  bool may_be_central(int i) const override;
  const CyclotomicAlgebra& algebra() const { return a_; }

 private:
  const CyclotomicAlgebra& a_;
  SparseVec unit_;
  std::vector<SparseVec> gens_;
};

struct CenterBasis {
  // reduced echelon within each degree; elements sorted by degree
  std::vector<SparseVec> elements;
  std::vector<int> degrees;
  int ambient_dim = 0;

  int dim() const { return static_cast<int>(elements.size()); }
  Laurent hilbert_series() const;
  // coordinates in the basis, or nothing when v is not in the span
  std::optional<std::vector<Rational>> coordinates(const SparseVec& v) const;
  SparseVec combine(const std::vector<Rational>& c) const;
  // structure constants: product of elements i and j in center coordinates
  std::vector<std::vector<std::vector<Rational>>> multiplication_table(const FiniteAlgebra& a) const;
};

struct CocenterBasis {
  Echelon commutators;
  std::vector<int> representatives;  // basis indices spanning A/[A,A]
  std::vector<int> degrees;

  int dim() const { return static_cast<int>(representatives.size()); }
  Laurent hilbert_series() const;
  SparseVec reduce(const SparseVec& v) const { return commutators.reduce(v); }
};

CenterBasis center_basis(const FiniteAlgebra& a);
CocenterBasis cocenter_basis(const FiniteAlgebra& a);
bool is_central(const FiniteAlgebra& a, const SparseVec& x);

}  // namespace klr
