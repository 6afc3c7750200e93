#include "klr/bimodule.hpp"

#include <algorithm>

#include "klr/kernels.hpp"

namespace klr {

namespace {


}  // namespace

Embedding::Embedding(const CyclotomicAlgebra& from, const CyclotomicAlgebra& to, int vertex)
    : from_(from), to_(to), vertex_(vertex) {
  RootVector expect = from.content();
  expect.at(vertex) += 1;
  if (expect != to.content() || from.lambda() != to.lambda()) throw InvalidInput("embedding between wrong algebras");
  RationalKLR& src = from.klr();
  RationalKLR& dst = to.klr();
  auto lift = [&](const Monomial& m) {
    Word w = src.words()[m.word];
    w.push_back(vertex);
    int perm = dst.group().from_letters(src.group().word(m.perm));
    return dst.monomial(perm, dst.word_index(w), m.dots);
  };
  for (const Monomial& m : from.basis()) images_.push_back(to.project(Element(lift(m), 1)));
  Element idem;
  for (int j = 0; j < src.nwords(); ++j) idem.add(lift(src.monomial(0, j)), 1);
  idem_ = to.project(idem);
}

Embedding::Element Embedding::operator()(const Element& x) const {
  Element r;
  for (auto& [m, c] : x.terms()) r.add_scaled(images_[from_.basis_index(m)], c);
  return r;
}

TensorSpace::TensorSpace(const Embedding& emb) : emb_(emb) {
  const CyclotomicAlgebra& B = outer();
  RationalKLR& alg = B.klr();
  const int n = B.strands();
  auto ends_in_vertex = [&](int word) { return alg.words()[word].back() == emb.vertex(); };
  // B e: bottom word ends in i; e B: top word ends in i
  std::map<int, std::vector<int>> left_by_bottom, right_by_top;
  for (int k = 0; k < B.dim(); ++k) {
    const Monomial& m = B.basis()[k];
    if (n == 0) continue;
    if (ends_in_vertex(m.word)) left_by_bottom[m.word].push_back(k);
    if (ends_in_vertex(alg.top_word(m))) right_by_top[alg.top_word(m)].push_back(k);
  }
  for (auto& [w, xs] : left_by_bottom)
    for (int x : xs)
      for (int y : right_by_top[w]) {
        index_.emplace(std::make_pair(x, y), static_cast<int>(pairs_.size()));
        pairs_.emplace_back(x, y);
      }
  relations_ = Echelon(naive_dim());

  // x g (x) y - x (x) g y over all x in B e and y in e B, also for x, y with
  // different middle words: a crossing g can connect them
  std::vector<Element> gens;
  for (const auto& g : emb.source().generators()) gens.push_back(emb(g));
  std::vector<int> lefts, rights;
  for (auto& [w, xs] : left_by_bottom) lefts.insert(lefts.end(), xs.begin(), xs.end());
  for (auto& [w, ys] : right_by_top) rights.insert(rights.end(), ys.begin(), ys.end());
  std::map<int, std::vector<Element>> xg, gy;
  for (int x : lefts)
    for (const auto& g : gens) xg[x].push_back(B.mul(basis_element(x), g));
  for (int y : rights)
    for (const auto& g : gens) gy[y].push_back(B.mul(g, basis_element(y)));
  std::vector<SparseVec> rows;
  for (int x : lefts)
    for (int y : rights)
      for (size_t g = 0; g < gens.size(); ++g) {
        SparseVec r = sparse_add(naive(xg[x][g], basis_element(y)), naive(basis_element(x), gy[y][g]), -1);
        if (!r.empty()) rows.push_back(std::move(r));
      }
  extend_basis(relations_, rows);
  free_ = relations_.free_columns();
}

int TensorSpace::degree(int idx) const {
  const auto& [x, y] = pairs_[idx];
  return outer().degree(outer().basis()[x]) + outer().degree(outer().basis()[y]);
}

SparseVec TensorSpace::naive(const Element& x, const Element& y) const {
  std::map<int, Rational> acc;
  for (auto& [mx, cx] : x.terms()) {
    int ix = outer().basis_index(mx);
    for (auto& [my, cy] : y.terms()) {
      if (mx.word != outer().klr().top_word(my)) continue;
      auto it = index_.find({ix, outer().basis_index(my)});
      if (it == index_.end()) throw std::logic_error("tensor factor outside B e or e B");
      acc[it->second] += cx * cy;
    }
  }
  SparseVec v;
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) v.emplace_back(k, c);
  return v;
}

SparseVec TensorSpace::tensor(const Element& x, const Element& y) const { return reduce(naive(x, y)); }

SparseVec TensorSpace::left_mul(const Element& b, const SparseVec& t) const {
  SparseVec out;
  for (auto& [idx, c] : t) {
    const auto& [x, y] = pairs_[idx];
    out = sparse_add(out, naive(outer().mul(b, basis_element(x)), basis_element(y)), c);
  }
  return reduce(out);
}

SparseVec TensorSpace::right_mul(const SparseVec& t, const Element& b) const {
  SparseVec out;
  for (auto& [idx, c] : t) {
    const auto& [x, y] = pairs_[idx];
    out = sparse_add(out, naive(basis_element(x), outer().mul(basis_element(y), b)), c);
  }
  return reduce(out);
}

TensorSpace::Element TensorSpace::multiply_out(const SparseVec& t) const {
  return contract(t, [&](const Element& x, const Element& y) { return outer().mul(x, y); });
}

}  // namespace klr
