#include "doctest.h"
#include "klr/quiver_io.hpp"
#include "klr/root_data.hpp"

using namespace klr;

TEST_CASE("cartan pairing") {
  Quiver a2 = Quiver::type_a(2);
  CHECK(a2.cartan(0, 0) == 2);
  CHECK(a2.cartan(0, 1) == -1);
  CHECK(a2.cartan(1, 0) == -1);
  Quiver pair({"1", "2"}, {});
  CHECK(pair.cartan(0, 1) == 0);
  Quiver d4 = Quiver::type_d4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(d4.cartan(i, j) == d4.cartan(j, i));
  CHECK(d4.finite_type());
  Quiver affine_a1({"0", "1"}, {{0, 1}, {1, 0}});
  CHECK(affine_a1.cartan(0, 1) == -2);
  CHECK_FALSE(affine_a1.finite_type());
  CHECK_THROWS_AS(a2.index("7"), InvalidInput);
}

TEST_CASE("loops and duplicates are rejected") {
  CHECK_THROWS_AS(Quiver({"1"}, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), InvalidInput);
}

TEST_CASE("Q polynomials") {
  Quiver a2 = Quiver::type_a(2);
  QPolynomial q12 = qpoly(a2, 0, 1);
  CHECK(q12.to_string() == "-u + v");
  CHECK(qpoly(a2, 1, 0).to_string() == "u - v");
  CHECK(qpoly(a2, 0, 1, true).to_string() == "-u + v + h");
  Quiver pair({"1", "2"}, {});
  CHECK(qpoly(pair, 0, 1).to_string() == "1");
  CHECK_THROWS_AS(qpoly(a2, 0, 0), InvalidInput);

  Quiver d4 = Quiver::type_d4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      for (int u = -3; u <= 3; ++u)
        for (int v = -3; v <= 3; ++v) {
          // swapping labels and arguments together is the identity
          CHECK(qpoly(d4, i, j).eval(u, v) == qpoly(d4, j, i).eval(v, u));
          long long sign = (d4.cartan(i, j) % 2 == 0) ? 1 : -1;
          CHECK(qpoly(d4, i, j).eval(u, v) == sign * qpoly(d4, j, i).eval(u, v));
          // the polynomial representation's factors multiply to Q
          CHECK(crossing_factor(d4, j, i).eval(u, v) * crossing_factor(d4, i, j).eval(v, u) ==
                qpoly(d4, i, j).eval(u, v));
        }
    }
}

TEST_CASE("degrees") {
  Quiver a2 = Quiver::type_a(2);
  CHECK(dot_degree() == 2);
  CHECK(crossing_degree(a2, 0, 0) == -2);
  CHECK(crossing_degree(a2, 0, 1) == 1);
  Quiver pair({"1", "2"}, {});
  CHECK(crossing_degree(pair, 0, 1) == 0);
  CHECK(cap_degree({2}, 0) == 1);
  CHECK(cup_degree({2}, 0) == -3);
}

TEST_CASE("beta forms") {
  Quiver a2 = Quiver::type_a(2);
  BetaForm b = BetaForm::from_order(a2, {0, 1});
  CHECK(b(1, 0) == 1);
  CHECK(b(0, 1) == 0);
  CHECK(b(0, 0) == 0);
  BetaForm bp = BetaForm::bipartite(a2, {0, 1});
  CHECK(bp(0, 1) == 1);
  CHECK(bp(1, 0) == 0);
  CHECK_THROWS_AS(BetaForm::bipartite(a2, {0, 0}), InvalidInput);
  CHECK_NOTHROW(BetaForm::zero(Quiver::type_a(1)));
  CHECK_THROWS_AS(BetaForm::zero(a2), InvalidInput);

  for (Quiver q : {Quiver::type_a(1), Quiver::type_a(2), Quiver::type_a(3), Quiver::type_d4()}) {
    std::vector<int> order(q.size());
    for (int i = 0; i < q.size(); ++i) order[i] = q.size() - 1 - i;
    for (const BetaForm& f : {BetaForm::from_order(q, order), BetaForm::bipartite(q)}) {
      CHECK_NOTHROW(f.validate(q));
      for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j) {
          RootVector a(q.size(), 0), c(q.size(), 0);
          a[i] = 1;
          c[j] = 1;
          CHECK((f(a, c) + f(c, a)) % 2 == ((q.pairing(a, c) % 2) + 2) % 2);
        }
    }
  }
  Quiver triangle({"1", "2", "3"}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(BetaForm::bipartite(triangle), InvalidInput);
}

TEST_CASE("xi offsets") {
  Quiver a1 = Quiver::type_a(1);
  CHECK(xi_offset(a1, {2}, {0}, 0) == -1);
  CHECK(xi_offset(a1, {2}, {2}, 0) == 2);
  CHECK(xi_offset(a1, {2}, {-2}, 0) == -4);
  CHECK(xi_offset(a1, {2}, {0}, 0, true) == 1);
  CHECK_THROWS_AS(xi_offset(a1, {2}, {1}, 0), InvalidInput);
  CHECK_THROWS_AS(xi_offset(a1, {2}, {4}, 0), InvalidInput);
  Quiver a2 = Quiver::type_a(2);
  CHECK(*a2.root_difference({1, 1}, {0, 0}) == RootVector{1, 1});
}

TEST_CASE("words") {
  auto w = words_of({2, 1});
  CHECK(w.size() == 3);
  CHECK(w.front() == Word{0, 0, 1});
  CHECK(w.back() == Word{1, 0, 0});
  CHECK(root_content({1, 0, 1}, 2) == RootVector{1, 2});
  CHECK(words_of({0, 0}).size() == 1);
}

TEST_CASE("quiver json") {
  Quiver q = parse_quiver_json(R"({"vertices":["a","b"],"edges":[["a","b"]],"weights":{"top":{"a":1,"b":1}}})");
  CHECK(q.size() == 2);
  CHECK(q.arrows(0, 1) == 1);
  CHECK(resolve_weight(q, "top") == Weight{1, 1});
  CHECK(resolve_weight(q, "2,0") == Weight{2, 0});
  CHECK_THROWS_AS(resolve_weight(q, "1"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver_json("{"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver_json(R"({"vertices":["a"],"edges":[["a","c"]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver_json(R"({"vertices":[1]})"), InvalidInput);
  Quiver back = parse_quiver_json(quiver_to_json(q));
  CHECK(back.arrows(0, 1) == 1);
  CHECK(back.named_weights.at("top") == Weight{1, 1});
}
