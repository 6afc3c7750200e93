#include <random>

#include "doctest.h"
#include "klr/klr_algebra.hpp"
#include "klr/relations.hpp"

using namespace klr;
using G = Generator;

TEST_CASE("nilHecke bigon vanishes") {
  RationalKLR alg(Quiver::type_a(1), {2});
  auto x = alg.straighten({{G::Crossing, 0}, {G::Crossing, 0}, {G::Idempotent, 0}});
  CHECK(x.is_zero());
}

TEST_CASE("nilHecke dot slide") {
  RationalKLR alg(Quiver::type_a(1), {2});
  // psi y2 - y1 psi = 1
  auto a = alg.straighten({{G::Crossing, 0}, {G::Dot, 1}});
  auto b = alg.straighten({{G::Dot, 0}, {G::Crossing, 0}});
  CHECK((a - b) == alg.unit());
  CHECK(alg.degree(a.terms().begin()->first) == 0);
}

TEST_CASE("bigon with distinct labels gives Q") {
  Quiver a2 = Quiver::type_a(2);
  RationalKLR alg(a2, {1, 1});
  int j = alg.word_index({0, 1});
  auto x = alg.straighten({{G::Crossing, 0}, {G::Crossing, 0}, {G::Idempotent, j}});
  // Q_12(y1, y2) = y2 - y1
  Exps e1{}, e2{};
  e1[0] = 1;
  e2[1] = 1;
  KLRElement<Rational> want;
  want.add(alg.monomial(0, j, e2), 1);
  want.add(alg.monomial(0, j, e1), -1);
  CHECK(x == want);
}

TEST_CASE("straightening is idempotent and respects degree") {
  Quiver a2 = Quiver::type_a(2);
  RationalKLR alg(a2, {2, 1});
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    std::vector<G> prod;
    int deg = 0;
    int word = static_cast<int>(rng() % alg.nwords());
    prod.push_back({G::Idempotent, word});
    Word cur = alg.words()[word];
    for (int k = 0; k < 5; ++k) {
      if (rng() % 2) {
        int s = static_cast<int>(rng() % 2);
        deg += crossing_degree(a2, cur[s], cur[s + 1]);
        std::swap(cur[s], cur[s + 1]);
        prod.insert(prod.begin(), {G::Crossing, s});
      } else {
        deg += 2;
        prod.insert(prod.begin(), {G::Dot, static_cast<int>(rng() % 3)});
      }
    }
    auto x = alg.straighten(prod);
    if (x.is_zero()) continue;
    CHECK(alg.degree(x) == deg);
    CHECK(alg.mul(alg.unit(), x) == x);
    CHECK(alg.mul(x, alg.unit()) == x);
  }
}

TEST_CASE("associativity on random monomials") {
  Quiver a3 = Quiver::type_a(3);
  RationalKLR alg(a3, {1, 2, 1});
  std::mt19937 rng(11);
  auto random_monomial = [&]() {
    Monomial m;
    m.perm = static_cast<uint16_t>(rng() % alg.group().order());
    m.word = static_cast<uint16_t>(rng() % alg.nwords());
    for (int p = 0; p < alg.strands(); ++p) m.dots[p] = static_cast<uint8_t>(rng() % 2);
    return m;
  };
  int nontrivial = 0;
  for (int t = 0; t < 300 && nontrivial < 25; ++t) {
    Monomial c = random_monomial();
    Monomial b = random_monomial();
    b.word = static_cast<uint16_t>(alg.words().size() > 0 ? alg.top_word(c) : 0);
    Monomial a = random_monomial();
    a.word = static_cast<uint16_t>(alg.top_word(b));
    KLRElement<Rational> ea(a, 1), eb(b, 1), ec(c, 1);
    auto left = alg.mul(alg.mul(ea, eb), ec);
    auto right = alg.mul(ea, alg.mul(eb, ec));
    CHECK(left == right);
    if (!left.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("relations hold by rewriting and in the polynomial representation") {
  Quiver a2 = Quiver::type_a(2);
  for (RootVector nu : {RootVector{1, 1}, RootVector{2, 1}, RootVector{1, 2}, RootVector{2, 2}}) {
    RationalKLR alg(a2, nu);
    RelationReport r = check_relations(alg, 20);
    INFO((r.messages.empty() ? std::string() : r.messages.front()));
    CHECK(r.ok());
  }
  RationalKLR nh(Quiver::type_a(1), {3});
  CHECK(check_relations(nh, 20).ok());
}

TEST_CASE("deformed relations and specialization") {
  Quiver a2 = Quiver::type_a(2);
  DeformedKLR def(a2, {2, 1}, true);
  RelationReport r = check_relations(def, 20);
  INFO((r.messages.empty() ? std::string() : r.messages.front()));
  CHECK(r.ok());
  RationalKLR plain(a2, {2, 1});
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<G> prod;
    for (int k = 0; k < 6; ++k)
      prod.push_back(rng() % 2 ? G{G::Crossing, static_cast<int>(rng() % 2)} : G{G::Dot, static_cast<int>(rng() % 3)});
    prod.push_back({G::Idempotent, static_cast<int>(rng() % plain.nwords())});
    CHECK(specialize(def.straighten(prod), 0) == plain.straighten(prod));
  }
}

TEST_CASE("block basis sizes") {
  RationalKLR alg(Quiver::type_a(1), {2});
  // degree 0: psi y1, psi y2 and the length-0 words have degree 0 only without dots
  CHECK(alg.block_basis(0, 0, 0).size() == 3);
  CHECK(alg.block_basis(0, 0, -2).size() == 1);
  CHECK(alg.block_basis(0, 0, 2).size() == 5);
  CHECK(alg.block_min_degree(0, 0) == -2);
}
