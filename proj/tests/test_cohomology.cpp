#include <doctest.h>

#include "klr/cohomology.hpp"

using namespace klr;

namespace {

Laurent poly(std::initializer_list<std::pair<int, long long>> t) {
  Laurent l;
  for (auto [e, c] : t) l.add(e, c);
  return l;
}

// [n choose k] in q = t^2 by direct expansion of the product formula
Laurent gaussian(int n, int k) {
  auto qint_prod = [](int from, int to) {
    Laurent p = Laurent::monomial(0);
    for (int m = from; m <= to; ++m) {
      Laurent f;
      for (int e = 0; e < m; ++e) f.add(2 * e, 1);
      p = p * f;
    }
    return p;
  };
  Laurent num = qint_prod(n - k + 1, n), den = qint_prod(1, k);
  // exact division of polynomials with integer coefficients
  Laurent quot;
  while (!num.is_zero()) {
    int e = num.max_exp() - den.max_exp();
    long long c = num.coeff(num.max_exp()) / den.coeff(den.max_exp());
    quot.add(e, c);
    num -= den.shift(e) * Laurent::monomial(0, c);
  }
  return quot;
}

}  // namespace

TEST_CASE("Grassmannian presentations") {
  CHECK(grassmannian_presentation(1, 2).hilbert_series() == poly({{0, 1}, {2, 1}}));
  CHECK(grassmannian_presentation(0, 3).hilbert_series() == poly({{0, 1}}));
  CHECK(grassmannian_presentation(2, 4).hilbert_series() == poly({{0, 1}, {2, 1}, {4, 2}, {6, 1}, {8, 1}}));
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) CHECK(grassmannian_presentation(k, n).hilbert_series() == gaussian(n, k));
  CHECK_THROWS_AS(grassmannian_presentation(3, 2), InvalidInput);
}

TEST_CASE("complete homogeneous classes") {
  // h_2 = c1^2 - c2
  GenPoly h2 = complete_homogeneous(2, 2);
  GenPoly expect(2);
  expect.add({2, 0}, 1);
  expect.add({0, 1}, -1);
  CHECK(h2 == expect);
  auto p = grassmannian_presentation(1, 2);
  CHECK(p.normal_form(GenPoly::generator(1, 0) * GenPoly::generator(1, 0)).is_zero());
}

TEST_CASE("rho images") {
  Quiver a1 = Quiver::type_a(1);
  RationalKLR one(a1, {1});
  auto r = rho(one, {0, 1});
  CHECK(r == KLRElement<Rational>(one.monomial(0, 0, Exps{1}), 1));
  RationalKLR two(a1, {2});
  auto c1 = rho(two, {0, 1});
  auto c2 = rho(two, {0, 2});
  CHECK(c1.size() == 2);
  CHECK(c2 == KLRElement<Rational>(two.monomial(0, 0, Exps{1, 1}), 1));
  CHECK(rho_central(two, c1));
  CHECK(rho_central(two, c2));
  CHECK(!rho_central(two, two.generator({Generator::Dot, 0, -1})));

  Quiver a2 = Quiver::type_a(2);
  RationalKLR mixed(a2, {1, 1});
  auto ci = rho(mixed, {0, 1});
  CHECK(ci.size() == 2);
  CHECK(rho_central(mixed, ci));
  CHECK(rho_central(mixed, rho(mixed, {1, 1})));
  RationalKLR big(a2, {2, 1});
  for (const auto& c : chern_generators({2, 1})) CHECK(rho_central(big, rho(big, c)));
}

TEST_CASE("rho is injective in low degrees for sl2") {
  Quiver a1 = Quiver::type_a(1);
  RationalKLR alg(a1, {3});
  // monomials in c1, c2, c3 of degree <= 8 have linearly independent images
  std::vector<KLRElement<Rational>> gens;
  for (int k = 1; k <= 3; ++k) gens.push_back(rho(alg, {0, k}));
  for (int d = 0; d <= 8; d += 2) {
    std::map<Monomial, int> cols;
    std::vector<SparseVec> rows;
    for (int a = 0; 2 * a <= d; ++a)
      for (int b = 0; 2 * a + 4 * b <= d; ++b) {
        int rest = d - 2 * a - 4 * b;
        if (rest % 6) continue;
        int c = rest / 6;
        KLRElement<Rational> x = alg.unit();
        for (int t = 0; t < a; ++t) x = alg.mul(x, gens[0]);
        for (int t = 0; t < b; ++t) x = alg.mul(x, gens[1]);
        for (int t = 0; t < c; ++t) x = alg.mul(x, gens[2]);
        SparseVec v;
        for (auto& [m, val] : x.terms()) {
          auto [it, fresh] = cols.try_emplace(m, static_cast<int>(cols.size()));
          v.emplace_back(it->second, val);
        }
        std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        rows.push_back(v);
      }
    CHECK(rank_of(rows, static_cast<int>(cols.size()) + 1) == static_cast<int>(rows.size()));
  }
}

TEST_CASE("phi check on small Grassmannians") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {0, 2}}) {
    auto r = phi_check(k, n);
    INFO("k=" << k << " n=" << n << " " << r.witness);
    CHECK(r.well_defined);
    CHECK(r.dims_match);
    CHECK(r.bijective);
    CHECK(r.square_commutes);
  }
}

TEST_CASE("Kirwan surjectivity on small cases") {
  Quiver a1 = Quiver::type_a(1);
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    CyclotomicAlgebra a(a1, {n}, {k});
    CyclotomicView v(a);
    CHECK(kirwan_check(a, center_basis(v)).ok());
  }
  Quiver a2 = Quiver::type_a(2);
  CyclotomicAlgebra b(a2, {1, 1}, {1, 1});
  CyclotomicView vb(b);
  auto rep = kirwan_check(b, center_basis(vb));
  CHECK(rep.ok());
  CHECK(rep.image_series == poly({{0, 1}, {2, 2}}));
}
