#include "klr/center.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "klr/kernels.hpp"

namespace klr {

SparseVec FiniteAlgebra::commutator(const SparseVec& a, const SparseVec& b) const {
  return sparse_add(mul(a, b), mul(b, a), -1);
}

std::vector<int> FiniteAlgebra::degrees_present() const {
  std::set<int> s;
  for (int i = 0; i < dim(); ++i) s.insert(degree(i));
  return {s.begin(), s.end()};
}

GradedAlgebra::GradedAlgebra(std::vector<int> degrees, const Product& product, SparseVec unit,
                             std::vector<SparseVec> gens)
    : degrees_(std::move(degrees)), unit_(std::move(unit)), gens_(std::move(gens)) {
  const int n = dim();
  table_.assign(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table_[i][j] = product(i, j);
}

SparseVec GradedAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  std::map<int, Rational> acc;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b)
      for (auto& [k, z] : table_[i][j]) acc[k] += x * y * z;
  SparseVec r;
  for (auto& [k, v] : acc)
    if (sgn(v) != 0) r.emplace_back(k, v);
  return r;
}

GradedAlgebra GradedAlgebra::truncated_polynomial(int var_degree, int nilpotency) {
  std::vector<int> deg;
  for (int k = 0; k < nilpotency; ++k) deg.push_back(k * var_degree);
  auto prod = [nilpotency](int i, int j) {
    if (i + j >= nilpotency) return SparseVec{};
    return SparseVec{{i + j, 1}};
  };
  std::vector<SparseVec> gens;
  if (nilpotency > 1) gens.push_back({{1, 1}});
  return GradedAlgebra(deg, prod, {{0, 1}}, gens);
}

GradedAlgebra GradedAlgebra::matrix_algebra(int n) {
  // E_ab has index a * n + b
  std::vector<int> deg(n * n, 0);
  auto prod = [n](int i, int j) {
    int a = i / n, b = i % n, c = j / n, d = j % n;
    if (b != c) return SparseVec{};
    return SparseVec{{a * n + d, 1}};
  };
  SparseVec unit;
  for (int a = 0; a < n; ++a) unit.emplace_back(a * n + a, 1);
  std::vector<SparseVec> gens;
  for (int i = 0; i < n * n; ++i) gens.push_back({{i, 1}});
  return GradedAlgebra(deg, prod, unit, gens);
}

CyclotomicView::CyclotomicView(const CyclotomicAlgebra& a) : a_(a) {
  unit_ = a.to_vector(a.unit());
  for (const auto& g : a.generators()) gens_.push_back(a.to_vector(g));
}

SparseVec CyclotomicView::mul(const SparseVec& x, const SparseVec& y) const {
  return a_.to_vector(a_.mul(a_.from_vector(x), a_.from_vector(y)));
}

bool CyclotomicView::may_be_central(int i) const {
  const Monomial& m = a_.basis()[i];
  return a_.klr().top_word(m) == m.word;
}

Laurent CenterBasis::hilbert_series() const {
  Laurent h;
  for (int d : degrees) h.add(d, 1);
  return h;
}

std::optional<std::vector<Rational>> CenterBasis::coordinates(const SparseVec& v) const {
  std::vector<Rational> c(elements.size());
  SparseVec rest = v;
  for (size_t k = 0; k < elements.size(); ++k) {
    c[k] = sparse_get(v, elements[k].back().first);
    if (sgn(c[k]) != 0) rest = sparse_add(rest, elements[k], -c[k]);
  }
  if (!rest.empty()) return std::nullopt;
  return c;
}

SparseVec CenterBasis::combine(const std::vector<Rational>& c) const {
  SparseVec r;
  for (size_t k = 0; k < elements.size(); ++k)
    if (sgn(c[k]) != 0) r = sparse_add(r, elements[k], c[k]);
  return r;
}

std::vector<std::vector<std::vector<Rational>>> CenterBasis::multiplication_table(const FiniteAlgebra& a) const {
  std::vector<std::vector<std::vector<Rational>>> t(dim(), std::vector<std::vector<Rational>>(dim()));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      auto c = coordinates(a.mul(elements[i], elements[j]));
      if (!c) throw std::logic_error("center is not closed under multiplication");
      t[i][j] = *c;
    }
  return t;
}

CenterBasis center_basis(const FiniteAlgebra& a) {
  CenterBasis out;
  out.ambient_dim = a.dim();
  const auto gens = a.generators();
  std::map<int, std::vector<int>> unknowns;
  for (int i = 0; i < a.dim(); ++i)
    if (a.may_be_central(i)) unknowns[a.degree(i)].push_back(i);

  for (auto& [d, idx] : unknowns) {
    // column j of the system is ([g, b_j])_g stacked over the generators
    std::map<long, SparseVec> rows;
    for (size_t j = 0; j < idx.size(); ++j) {
      SparseVec bj{{idx[j], 1}};
      for (size_t g = 0; g < gens.size(); ++g)
        for (auto& [k, x] : a.commutator(gens[g], bj))
          rows[static_cast<long>(g) * a.dim() + k].emplace_back(static_cast<int>(j), x);
    }
    std::vector<SparseVec> eqs;
    for (auto& [key, r] : rows) eqs.push_back(std::move(r));
    Echelon sol(a.dim());
    for (const SparseVec& k : kernel_of(eqs, static_cast<int>(idx.size()))) {
      SparseVec v;
      for (auto& [j, x] : k) v.emplace_back(idx[j], x);
      std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      sol.insert(v);
    }
    std::vector<SparseVec> rs = sol.rows();
    std::sort(rs.begin(), rs.end(), [](const SparseVec& p, const SparseVec& q) { return p.back().first < q.back().first; });
    for (auto& r : rs) {
      out.elements.push_back(r);
      out.degrees.push_back(d);
    }
  }
  return out;
}

Laurent CocenterBasis::hilbert_series() const {
  Laurent h;
  for (int d : degrees) h.add(d, 1);
  return h;
}

CocenterBasis cocenter_basis(const FiniteAlgebra& a) {
  CocenterBasis out;
  out.commutators = Echelon(a.dim());
  std::vector<SparseVec> rows;
  for (const auto& g : a.generators())
    for (int i = 0; i < a.dim(); ++i) {
      auto c = a.commutator(g, SparseVec{{i, 1}});
      if (!c.empty()) rows.push_back(std::move(c));
    }
  extend_basis(out.commutators, rows);
  out.representatives = out.commutators.free_columns();
  for (int i : out.representatives) out.degrees.push_back(a.degree(i));
  return out;
}

bool is_central(const FiniteAlgebra& a, const SparseVec& x) {
  for (const auto& g : a.generators())
    if (!a.commutator(g, x).empty()) return false;
  return true;
}

}  // namespace klr
