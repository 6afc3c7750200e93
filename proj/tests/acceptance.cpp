#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "klr/center.hpp"
#include "klr/cohomology.hpp"
#include "klr/current_algebra.hpp"
#include "klr/cyclotomic.hpp"
#include "klr/relations.hpp"
#include "klr/shapovalov.hpp"

using namespace klr;

namespace {

// [n choose k] in q = t^2 via the q-Pascal rule
Laurent gaussian(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return Laurent::monomial(0);
  return gaussian(n - 1, k - 1) + gaussian(n - 1, k).shift(2 * k);
}

// all contents with at most max_strands strands
std::vector<RootVector> contents(int rank, int max_strands) {
  std::vector<RootVector> out;
  RootVector nu(rank, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == rank) {
      out.push_back(nu);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      nu[v] = c;
      rec(v + 1, left - c);
    }
    nu[v] = 0;
  };
  rec(0, max_strands);
  return out;
}

struct Case {
  Quiver q;
  Weight lambda;
  RootVector nu;
};

// criterion 2 instances: sl2 n Lambda at k alpha, and A2 adjoint below 2a1 + a2
std::vector<Case> certification_cases() {
  std::vector<Case> out;
  Quiver a1 = Quiver::type_a(1), a2 = Quiver::type_a(2);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) out.push_back({a1, {n}, {k}});
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b) out.push_back({a2, {1, 1}, {a, b}});
  return out;
}

std::string label(const Case& c) {
  return "lambda=" + weight_to_string(c.lambda) + " nu=" + weight_to_string(c.nu);
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome relation_suite() {
  Outcome o;
  std::vector<std::pair<std::string, Quiver>> quivers = {
      {"A1", Quiver::type_a(1)}, {"A2", Quiver::type_a(2)}, {"A3", Quiver::type_a(3)}, {"D4", Quiver::type_d4()}};
  int relations = 0;
  for (auto& [name, q] : quivers)
    for (auto& nu : contents(q.size(), 4)) {
      int n = 0;
      for (int c : nu) n += c;
      if (n == 0) continue;
      RationalKLR alg(q, nu);
      RelationReport r = check_relations(alg, 6);
      relations += r.relations;
      if (!r.ok())
        o.fail(name + " nu=" + weight_to_string(nu) + (r.messages.empty() ? "" : ": " + r.messages.front()));
    }
  if (o.pass) o.detail = std::to_string(relations) + " relation instances";
  return o;
}

Outcome certification() {
  Outcome o;
  int count = 0;
  for (auto& c : certification_cases()) {
    CyclotomicAlgebra a(c.q, c.lambda, c.nu);
    ShapovalovOracle oracle(c.q, c.lambda);
    if (a.hilbert_series() != oracle.hilbert_series(c.nu))
      o.fail(label(c) + ": " + a.hilbert_series().to_string() + " vs " + oracle.hilbert_series(c.nu).to_string());
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " quotients";
  return o;
}

Outcome grassmannian() {
  Outcome o;
  Quiver a1 = Quiver::type_a(1);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      CyclotomicAlgebra a(a1, {n}, {k});
      CenterBasis z = center_basis(CyclotomicView(a));
      std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      if (z.hilbert_series() != gaussian(n, k)) o.fail(at + ": center " + z.hilbert_series().to_string());
      PhiReport p = phi_check(k, n);
      if (!p.well_defined || !p.bijective) o.fail(at + ": phi " + p.witness);
    }
  if (o.pass) o.detail = "15 cases";
  return o;
}

Outcome kirwan() {
  Outcome o;
  for (auto& c : certification_cases()) {
    CyclotomicAlgebra a(c.q, c.lambda, c.nu);
    if (a.dim() == 0) continue;
    CyclotomicView view(a);
    if (!kirwan_check(a, center_basis(view)).ok()) o.fail(label(c));
  }
  return o;
}

struct Family {
  Quiver q;
  Weight lambda;
};

std::vector<Family> current_families() {
  Quiver a1 = Quiver::type_a(1);
  return {{a1, {1}}, {a1, {2}}, {a1, {3}}, {Quiver::type_a(2), {1, 1}}};
}

std::vector<int> identity_order(int rank) {
  std::vector<int> v(rank);
  for (int i = 0; i < rank; ++i) v[i] = i;
  return v;
}

Outcome current_relations() {
  Outcome o;
  for (auto& f : current_families()) {
    WeightFamily fam(f.q, f.lambda);
    CurrentAction act(fam, BetaForm::from_order(f.q, identity_order(f.q.size())));
    CurrentReport r = verify_current_relations(act);
    std::string at = "lambda=" + weight_to_string(f.lambda);
    for (auto& c : r.checks)
      if (!c.ok) o.fail(at + ": " + c.name + " " + c.witness);
    if (!r.generated)
      o.fail(at + ": identities generate " + std::to_string(r.span_dim) + "/" + std::to_string(r.total_dim));
  }
  return o;
}

Outcome cyclicity() {
  Outcome o;
  int maps = 0;
  for (auto& f : current_families()) {
    WeightFamily fam(f.q, f.lambda);
    CyclicityReport order = check_cyclicity(fam, BetaForm::from_order(f.q, identity_order(f.q.size())));
    CyclicityReport bip = check_cyclicity(fam, BetaForm::bipartite(f.q));
    std::string at = "lambda=" + weight_to_string(f.lambda);
    if (!order.ok()) o.fail(at + ": order form");
    if (!bip.ok()) o.fail(at + ": bipartite form");
    if (order.entries.size() != bip.entries.size()) o.fail(at + ": different double dual sets");
    for (size_t k = 0; k < order.entries.size() && k < bip.entries.size(); ++k)
      if (order.entries[k].sign() != bip.entries[k].sign()) o.fail(at + ": double dual depends on the form");
    maps += static_cast<int>(order.entries.size() + bip.entries.size());
  }
  if (o.pass) o.detail = std::to_string(maps) + " double duals";
  return o;
}

Outcome commuting_square() {
  Outcome o;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      if (!phi_check(k, n).square_commutes) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
  return o;
}

Outcome deformation() {
  Outcome o;
  long compared = 0;
  for (auto& c : certification_cases()) {
    CyclotomicAlgebra a(c.q, c.lambda, c.nu);
    DeformationReport d = compare_deformed(a, true);
    compared += d.compared;
    if (!d.ok()) o.fail(label(c) + ": " + d.first_mismatch);
  }
  if (o.pass) o.detail = std::to_string(compared) + " products";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"relation suite", relation_suite},
      {"cyclotomic certification", certification},
      {"centers are Grassmannian cohomology", grassmannian},
      {"algebraic Kirwan surjectivity", kirwan},
      {"current algebra relations and generation", current_relations},
      {"cyclicity of the twisted duality", cyclicity},
      {"commuting square", commuting_square},
      {"deformation at h = 0", deformation},
  };
  int failed = 0;
  int index = 0;
  for (auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  " << index << ". " << c.name;
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    line.precision(2);
    line << std::fixed << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
