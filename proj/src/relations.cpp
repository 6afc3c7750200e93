#include "klr/relations.hpp"

#include <random>

namespace klr {

MultiPoly to_multipoly(const Rational& c) { return MultiPoly::constant(c); }

MultiPoly to_multipoly(const HPoly& c) {
  MultiPoly r, hp = MultiPoly::constant(1);
  for (int k = 0; k <= c.degree(); ++k) {
    r += hp.scaled(c.coeff(k));
    hp = hp * MultiPoly::h();
  }
  return r;
}

std::vector<LabeledPoly> test_vectors(const RootVector& nu, int max_degree) {
  const int n = total_height(nu);
  const int nw = static_cast<int>(words_of(nu).size());
  std::vector<MultiPoly::Key> monos{MultiPoly::Key{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<MultiPoly::Key> next;
    for (auto& m : monos) {
      int sum = 0, last = 0;
      for (int p = 0; p < n; ++p) {
        sum += m[p];
        if (m[p]) last = p;
      }
      if (sum != d - 1) continue;
      for (int p = last; p < n; ++p) {
        auto e = m;
        ++e[p];
        next.push_back(e);
      }
    }
    monos.insert(monos.end(), next.begin(), next.end());
  }
  std::vector<LabeledPoly> out;
  for (int j = 0; j < nw; ++j)
    for (auto& m : monos) {
      MultiPoly f;
      f.add(m, 1);
      out.push_back(LabeledPoly{{j, f}});
    }
  return out;
}

namespace {

template <class C>
void push_poly(std::vector<RelationTerm<C>>& terms, const DotPoly<C>& f, int word, const C& sign) {
  for (auto& [e, c] : f) {
    RelationTerm<C> t{c * sign, {}};
    for (int p = 0; p < kMaxStrands; ++p)
      for (int k = 0; k < e[p]; ++k) t.product.push_back({Generator::Dot, p, -1});
    t.product.push_back({Generator::Idempotent, word, -1});
    terms.push_back(t);
  }
}

}  // namespace

template <class C>
std::vector<Relation<C>> defining_relations(const KLRAlgebra<C>& alg) {
  using G = Generator;
  std::vector<Relation<C>> rels;
  const int n = alg.strands();
  const C one(1), minus(-1);
  for (int j = 0; j < alg.nwords(); ++j) {
    const Word& w = alg.words()[j];
    std::string tag = "e(" + weight_to_string(w) + ")";
    G e{G::Idempotent, j, -1};
    for (int j2 = 0; j2 < alg.nwords(); ++j2) {
      Relation<C> r{"idempotents " + tag, {{one, {e, {G::Idempotent, j2, -1}}}}};
      if (j2 == j) r.terms.push_back({minus, {e}});
      rels.push_back(r);
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        rels.push_back({"dots commute " + tag, {{one, {{G::Dot, a}, {G::Dot, b}, e}}, {minus, {{G::Dot, b}, {G::Dot, a}, e}}}});
    for (int k = 0; k + 1 < n; ++k) {
      G psi{G::Crossing, k};
      for (int p = 0; p < n; ++p) {
        if (p == k || p == k + 1) continue;
        rels.push_back({"distant dot " + tag, {{one, {psi, {G::Dot, p}, e}}, {minus, {{G::Dot, p}, psi, e}}}});
      }
      for (int l = k + 2; l + 1 < n; ++l) {
        G psi2{G::Crossing, l};
        rels.push_back({"distant crossings " + tag, {{one, {psi, psi2, e}}, {minus, {psi2, psi, e}}}});
      }
      const bool same = w[k] == w[k + 1];
      // psi_k y_{k+1} e - y_k psi_k e = delta e ; y_{k+1} psi_k e - psi_k y_k e = delta e
      Relation<C> s1{"dot slide " + tag, {{one, {psi, {G::Dot, k + 1}, e}}, {minus, {{G::Dot, k}, psi, e}}}};
      Relation<C> s2{"dot slide " + tag, {{one, {{G::Dot, k + 1}, psi, e}}, {minus, {psi, {G::Dot, k}, e}}}};
      if (same) {
        s1.terms.push_back({minus, {e}});
        s2.terms.push_back({minus, {e}});
      }
      rels.push_back(s1);
      rels.push_back(s2);
      Relation<C> bigon{"bigon " + tag, {{one, {psi, psi, e}}}};
      if (!same) push_poly(bigon.terms, alg.bigon_poly(w[k], w[k + 1], k), j, minus);
      rels.push_back(bigon);
    }
    for (int r = 0; r + 2 < n; ++r) {
      G a{G::Crossing, r}, b{G::Crossing, r + 1};
      Relation<C> braid{"braid " + tag, {{one, {b, a, b, e}}, {minus, {a, b, a, e}}}};
      push_poly(braid.terms, alg.braid_poly(w, r), j, minus);
      rels.push_back(braid);
    }
  }
  return rels;
}

template <class C>
RelationReport check_relations(KLRAlgebra<C>& alg, int random_products, unsigned seed) {
  RelationReport rep;
  PolynomialRep poly(alg.quiver(), alg.content(), alg.deformed());
  auto vectors = test_vectors(alg.content(), 2);
  for (const Relation<C>& r : defining_relations(alg)) {
    ++rep.relations;
    KLRElement<C> sum;
    for (auto& t : r.terms) sum.add_scaled(alg.straighten(t.product), t.coeff);
    if (!sum.is_zero()) {
      ++rep.rewriting_failures;
      rep.messages.push_back("rewriting: " + r.name + " leaves " + alg.to_string(sum));
    }
    for (auto& f : vectors) {
      LabeledPoly acc;
      for (auto& t : r.terms) {
        LabeledPoly g = poly.apply(t.product, f);
        MultiPoly c = to_multipoly(t.coeff);
        for (auto& [j, p] : g) acc[j] += p * c;
      }
      std::erase_if(acc, [](auto& x) { return x.second.is_zero(); });
      if (!acc.empty()) {
        ++rep.representation_failures;
        rep.messages.push_back("representation: " + r.name);
        break;
      }
    }
  }
  const int n = alg.strands();
  if (n == 0) return rep;
  std::mt19937 rng(seed);
  for (int t = 0; t < random_products; ++t) {
    std::vector<Generator> prod;
    int len = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) {
      if (n > 1 && rng() % 2) prod.push_back({Generator::Crossing, static_cast<int>(rng() % (n - 1))});
      else prod.push_back({Generator::Dot, static_cast<int>(rng() % n)});
    }
    prod.push_back({Generator::Idempotent, static_cast<int>(rng() % alg.nwords())});
    KLRElement<C> x = alg.straighten(prod);
    ++rep.cross_checks;
    for (auto& f : vectors) {
      if (!labeled_equal(poly.apply(alg, x, f), poly.apply(prod, f))) {
        ++rep.cross_failures;
        rep.messages.push_back("straightened product disagrees with the representation");
        break;
      }
    }
  }
  return rep;
}

template std::vector<Relation<Rational>> defining_relations(const KLRAlgebra<Rational>&);
template std::vector<Relation<HPoly>> defining_relations(const KLRAlgebra<HPoly>&);
template RelationReport check_relations(KLRAlgebra<Rational>&, int, unsigned);
template RelationReport check_relations(KLRAlgebra<HPoly>&, int, unsigned);

}  // namespace klr
