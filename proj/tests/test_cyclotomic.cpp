#include <doctest.h>

#include "klr/cyclotomic.hpp"
#include "klr/shapovalov.hpp"

using namespace klr;

namespace {

Laurent poly(std::initializer_list<std::pair<int, long long>> t) {
  Laurent l;
  for (auto [e, c] : t) l.add(e, c);
  return l;
}

}  // namespace

TEST_CASE("sl2 small quotients") {
  Quiver a1 = Quiver::type_a(1);
  CHECK(CyclotomicAlgebra(a1, {1}, {1}).hilbert_series() == poly({{0, 1}}));
  CHECK(CyclotomicAlgebra(a1, {2}, {1}).hilbert_series() == poly({{0, 1}, {2, 1}}));
  CHECK(CyclotomicAlgebra(a1, {2}, {2}).dim() == 4);
  CHECK(CyclotomicAlgebra(a1, {2}, {0}).dim() == 1);
  CHECK(CyclotomicAlgebra(a1, {1}, {2}).dim() == 0);
}

TEST_CASE("cyclotomic relation and projection") {
  Quiver a1 = Quiver::type_a(1);
  CyclotomicAlgebra A(a1, {2}, {1});
  auto y = A.dot(0);
  CHECK(!y.is_zero());
  CHECK(A.mul(y, y).is_zero());
  CHECK(A.unit() == A.idempotent(0));
  CHECK(A.nilpotency_orders() == std::vector<int>{2});
}

TEST_CASE("sl2 family matches the oracle") {
  Quiver a1 = Quiver::type_a(1);
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      CyclotomicAlgebra A(a1, {n}, {k});
      ShapovalovOracle s(a1, {n});
      CHECK(A.hilbert_series() == s.hilbert_series({k}));
    }
}

TEST_CASE("A2 adjoint quotients") {
  Quiver a2 = Quiver::type_a(2);
  CyclotomicAlgebra A(a2, {1, 1}, {1, 1});
  CHECK(A.hilbert_series() == poly({{0, 2}, {1, 2}, {2, 2}}));
  for (int t = 0; t < A.nwords(); ++t)
    for (int b = 0; b < A.nwords(); ++b) CHECK(A.block_series(t, b) == A.block_series(b, t));
  CHECK(check_associativity(A, true));
  CyclotomicAlgebra B(a2, {1, 1}, {2, 1});
  CHECK(B.dim() == 9);
  CHECK(check_associativity(B, false, 300));
}

TEST_CASE("degree cap below the top degree is an uncertified build") {
  Quiver a1 = Quiver::type_a(1);
  try {
    CyclotomicAlgebra A(a1, {3}, {1}, BuildOptions{2});
    FAIL("expected an uncertified build");
  } catch (const UncertifiedBuild& e) {
    CHECK(e.degree() == 4);
  }
  CHECK_NOTHROW(CyclotomicAlgebra(a1, {3}, {1}, BuildOptions{4}));
}

TEST_CASE("every dot is nilpotent") {
  Quiver a2 = Quiver::type_a(2);
  CyclotomicAlgebra A(a2, {1, 1}, {2, 1});
  for (int o : A.nilpotency_orders()) CHECK(o >= 1);
  Quiver a1 = Quiver::type_a(1);
  CyclotomicAlgebra N(a1, {3}, {2});
  auto orders = N.nilpotency_orders();
  CHECK(orders.size() == 2);
  // y_1^3 e = 0 by the relation and y_1^2 survives in the top degree
  CHECK(orders[0] == 3);
}

TEST_CASE("deformation specializes to the undeformed structure constants") {
  Quiver a1 = Quiver::type_a(1);
  auto r1 = compare_deformed(CyclotomicAlgebra(a1, {3}, {2}), true);
  CHECK(r1.ok());
  CHECK(r1.compared > 0);
  Quiver a2 = Quiver::type_a(2);
  auto r2 = compare_deformed(CyclotomicAlgebra(a2, {1, 1}, {1, 1}), true);
  CHECK(r2.ok());
}
