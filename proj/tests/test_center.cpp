#include <doctest.h>

#include "klr/center.hpp"

using namespace klr;

namespace {

Laurent poly(std::initializer_list<std::pair<int, long long>> t) {
  Laurent l;
  for (auto [e, c] : t) l.add(e, c);
  return l;
}

// [n choose k] in q = t^2, by the q-Pascal recursion
Laurent gaussian(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return Laurent::monomial(0);
  return gaussian(n - 1, k - 1) + gaussian(n - 1, k).shift(2 * k);
}

// t^top f(t^-1)
Laurent reversed(const Laurent& f) {
  Laurent r;
  for (auto& [e, c] : f.terms()) r.add(f.max_exp() - e, c);
  return r;
}

}  // namespace

TEST_CASE("commutative and matrix examples") {
  auto p = GradedAlgebra::truncated_polynomial(2, 2);
  auto z = center_basis(p);
  CHECK(z.dim() == 2);
  CHECK(z.hilbert_series() == poly({{0, 1}, {2, 1}}));
  CHECK(cocenter_basis(p).dim() == 2);
  auto m = GradedAlgebra::matrix_algebra(2);
  CHECK(center_basis(m).dim() == 1);
  CHECK(cocenter_basis(m).dim() == 1);
  CHECK(is_central(m, m.unit()));
  CHECK(!is_central(m, SparseVec{{1, 1}}));
}

TEST_CASE("small cyclotomic centers") {
  Quiver a1 = Quiver::type_a(1);
  CyclotomicAlgebra A(a1, {2}, {1});
  CyclotomicView va(A);
  auto za = center_basis(va);
  CHECK(za.hilbert_series() == poly({{0, 1}, {2, 1}}));
  CHECK(is_central(va, va.unit()));
  CHECK(is_central(va, A.to_vector(A.dot(0))));

  CyclotomicAlgebra N(a1, {2}, {2});
  CyclotomicView vn(N);
  auto zn = center_basis(vn);
  CHECK(zn.dim() == 1);
  CHECK(zn.degrees == std::vector<int>{0});
  CHECK(!is_central(vn, N.to_vector(N.crossing(0))));
  CHECK(cocenter_basis(vn).dim() == 1);
}

TEST_CASE("sl2 centers have Gaussian binomial Hilbert series") {
  Quiver a1 = Quiver::type_a(1);
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      CyclotomicAlgebra A(a1, {n}, {k});
      CyclotomicView v(A);
      auto z = center_basis(v);
      CHECK(z.hilbert_series() == gaussian(n, k));
      for (auto& e : z.elements) CHECK(is_central(v, e));
      auto t = z.multiplication_table(v);
      CHECK(z.coordinates(v.unit()).has_value());
    }
}

TEST_CASE("center and cocenter are dual up to a shift") {
  Quiver a1 = Quiver::type_a(1);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      CyclotomicAlgebra A(a1, {n}, {k});
      CyclotomicView v(A);
      Laurent z = center_basis(v).hilbert_series();
      Laurent c = cocenter_basis(v).hilbert_series();
      CHECK(c == reversed(z));
      CHECK(c == z);
    }
  Quiver a2 = Quiver::type_a(2);
  CyclotomicAlgebra B(a2, {1, 1}, {1, 1});
  CyclotomicView vb(B);
  Laurent zb = center_basis(vb).hilbert_series();
  CHECK(cocenter_basis(vb).hilbert_series() == reversed(zb));
  CHECK(zb == poly({{0, 1}, {2, 2}}));
}
