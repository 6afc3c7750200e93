#include "klr/root_data.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <queue>
#include <sstream>

namespace klr {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges)
    : names_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = size();
  if (n == 0) throw InvalidInput("quiver has no vertices");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw InvalidInput("duplicate vertex name " + names_[i]);
  arrows_.assign(n, std::vector<int>(n, 0));
  for (auto [s, t] : edges_) {
    if (s < 0 || t < 0 || s >= n || t >= n) throw InvalidInput("edge endpoint out of range");
    if (s == t) throw InvalidInput("loops are not allowed (vertex " + names_[s] + ")");
    ++arrows_[s][t];
  }
}

Quiver Quiver::type_a(int rank) {
  std::vector<std::string> v;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < rank; ++i) v.push_back(std::to_string(i + 1));
  for (int i = 0; i + 1 < rank; ++i) e.emplace_back(i, i + 1);
  Quiver q(v, e);
  for (int i = 0; i < rank; ++i) {
    Weight w(rank, 0);
    w[i] = 1;
    q.named_weights["L" + std::to_string(i + 1)] = w;
  }
  return q;
}

Quiver Quiver::type_d4() {
  Quiver q({"1", "2", "3", "4"}, {{0, 1}, {2, 1}, {3, 1}});
  for (int i = 0; i < 4; ++i) {
    Weight w(4, 0);
    w[i] = 1;
    q.named_weights["L" + std::to_string(i + 1)] = w;
  }
  return q;
}

int Quiver::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw InvalidInput("unknown vertex " + name);
}

int Quiver::cartan(int i, int j) const {
  if (i == j) return 2;
  return -(arrows_[i][j] + arrows_[j][i]);
}

bool Quiver::finite_type() const {
  // positive definiteness via leading principal minors of the Cartan matrix
  const int n = size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = cartan(i, j);
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int r = k + 1; r < n; ++r) {
      mpq_class f = m[r][k] / m[k][k];
      for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return true;
}

Weight Quiver::simple_root(int j) const {
  Weight w(size());
  for (int i = 0; i < size(); ++i) w[i] = cartan(i, j);
  return w;
}

Weight Quiver::weight_of(const Weight& lambda, const RootVector& nu) const {
  if (static_cast<int>(lambda.size()) != size() || static_cast<int>(nu.size()) != size())
    throw InvalidInput("weight or root vector has the wrong rank");
  Weight mu = lambda;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) mu[i] -= cartan(i, j) * nu[j];
  return mu;
}

int Quiver::pairing(const RootVector& a, const RootVector& b) const {
  int s = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) s += a[i] * cartan(i, j) * b[j];
  return s;
}

std::optional<RootVector> Quiver::root_difference(const Weight& lambda, const Weight& mu) const {
  const int n = size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cartan(i, j);
    m[i][n] = lambda[i] - mu[i];
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  RootVector v(n);
  for (int i = 0; i < n; ++i) {
    mpq_class x = m[i][n] / m[i][i];
    if (x.get_den() != 1) return std::nullopt;
    v[i] = static_cast<int>(x.get_num().get_si());
  }
  return v;
}

Quiver Quiver::subquiver(const std::vector<int>& keep) const {
  std::vector<std::string> v;
  std::vector<int> pos(size(), -1);
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) {
    pos[keep[k]] = k;
    v.push_back(names_[keep[k]]);
  }
  std::vector<std::pair<int, int>> e;
  for (auto [s, t] : edges_)
    if (pos[s] >= 0 && pos[t] >= 0) e.emplace_back(pos[s], pos[t]);
  return Quiver(v, e);
}

RootVector root_content(const Word& w, int rank) {
  RootVector nu(rank, 0);
  for (int a : w) ++nu.at(a);
  return nu;
}

std::vector<Word> words_of(const RootVector& nu) {
  Word w;
  for (int i = 0; i < static_cast<int>(nu.size()); ++i) {
    if (nu[i] < 0) throw InvalidInput("negative root multiplicity");
    w.insert(w.end(), nu[i], i);
  }
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int total_height(const RootVector& nu) {
  int s = 0;
  for (int x : nu) s += x;
  return s;
}

bool QPolynomial::has_h() const {
  for (auto& [e, c] : terms)
    if (e[2] > 0) return true;
  return false;
}

long long QPolynomial::eval(long long u, long long v, long long h) const {
  long long s = 0;
  for (auto& [e, c] : terms) {
    long long t = c;
    for (int k = 0; k < e[0]; ++k) t *= u;
    for (int k = 0; k < e[1]; ++k) t *= v;
    for (int k = 0; k < e[2]; ++k) t *= h;
    s += t;
  }
  return s;
}

std::string QPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    bool mono = e[0] + e[1] + e[2] > 0;
    if (a != 1 || !mono) os << a;
    const char* names[3] = {"u", "v", "h"};
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      os << names[k];
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

namespace {

using Poly3 = std::map<std::array<int, 3>, long long>;

Poly3 mul(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      r[e] += ca * cb;
    }
  std::erase_if(r, [](auto& t) { return t.second == 0; });
  return r;
}

Poly3 power(const Poly3& a, int k) {
  Poly3 r{{{0, 0, 0}, 1}};
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Poly3 linear(int su, int sv, bool h) {
  Poly3 r;
  if (su) r[{1, 0, 0}] = su;
  if (sv) r[{0, 1, 0}] = sv;
  if (h) r[{0, 0, 1}] = 1;
  return r;
}

}  // namespace

QPolynomial qpoly(const Quiver& q, int i, int j, bool deformed) {
  if (i == j) throw InvalidInput("Q_ij is only defined for distinct vertices");
  QPolynomial p;
  p.terms = mul(power(linear(1, -1, deformed), q.arrows(j, i)),
                power(linear(-1, 1, deformed), q.arrows(i, j)));
  return p;
}

QPolynomial crossing_factor(const Quiver& q, int i, int j, bool deformed) {
  QPolynomial p;
  if (i == j) return p;
  p.terms = power(linear(-1, 1, deformed), q.arrows(j, i));
  return p;
}

int dot_degree() { return 2; }
int crossing_degree(const Quiver& q, int left, int right) { return -q.cartan(left, right); }
int cap_degree(const Weight& lambda, int i) { return lambda.at(i) - 1; }
int cup_degree(const Weight& lambda, int i) { return -lambda.at(i) - 1; }

BetaForm BetaForm::from_order(const Quiver& q, const std::vector<int>& order) {
  const int n = q.size();
  if (static_cast<int>(order.size()) != n) throw InvalidInput("vertex order has the wrong length");
  std::vector<int> rank(n, -1);
  for (int k = 0; k < n; ++k) {
    if (order[k] < 0 || order[k] >= n || rank[order[k]] >= 0)
      throw InvalidInput("vertex order is not a permutation");
    rank[order[k]] = k;
  }
  BetaForm b;
  b.kind_ = Kind::Order;
  b.table_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rank[i] > rank[j]) b.table_[i][j] = ((q.cartan(i, j) % 2) + 2) % 2;
  return b;
}

BetaForm BetaForm::bipartite(const Quiver& q) {
  const int n = q.size();
  std::vector<int> parity(n, -1);
  for (int s = 0; s < n; ++s) {
    if (parity[s] >= 0) continue;
    parity[s] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int a = bfs.front();
      bfs.pop();
      for (int b = 0; b < n; ++b) {
        if (b == a || q.cartan(a, b) % 2 == 0) continue;
        if (parity[b] < 0) {
          parity[b] = 1 - parity[a];
          bfs.push(b);
        } else if (parity[b] == parity[a]) {
          throw InvalidInput("quiver has an odd cycle; no bipartite beta form");
        }
      }
    }
  }
  return bipartite(q, parity);
}

BetaForm BetaForm::bipartite(const Quiver& q, const std::vector<int>& parity) {
  const int n = q.size();
  BetaForm b;
  b.kind_ = Kind::Bipartite;
  b.table_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && parity[i] == 0) b.table_[i][j] = ((q.cartan(i, j) % 2) + 2) % 2;
  b.validate(q);
  return b;
}

BetaForm BetaForm::zero(const Quiver& q) {
  BetaForm b;
  b.kind_ = Kind::Zero;
  b.table_.assign(q.size(), std::vector<int>(q.size(), 0));
  b.validate(q);
  return b;
}

int BetaForm::operator()(const RootVector& a, const RootVector& b) const {
  long long s = 0;
  for (size_t i = 0; i < table_.size(); ++i)
    for (size_t j = 0; j < table_.size(); ++j) s += static_cast<long long>(a[i]) * b[j] * table_[i][j];
  return static_cast<int>(((s % 2) + 2) % 2);
}

void BetaForm::validate(const Quiver& q) const {
  const int n = q.size();
  for (int i = 0; i < n; ++i) {
    if (table_[i][i] != 0) throw InvalidInput("beta form must vanish on the diagonal");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int lhs = (table_[i][j] + table_[j][i]) % 2;
      int rhs = ((q.cartan(i, j) % 2) + 2) % 2;
      if (lhs != rhs)
        throw InvalidInput("beta form violates beta(a,b)+beta(b,a) = <a,b> mod 2 at " + q.name(i) +
                           "," + q.name(j));
    }
  }
}

std::string BetaForm::describe() const {
  switch (kind_) {
    case Kind::Order: return "order";
    case Kind::Bipartite: return "bipartite";
    case Kind::Zero: return "zero";
  }
  return "?";
}

int xi_offset(const Quiver& q, const Weight& lambda, const Weight& mu, int i, bool alt) {
  auto v = q.root_difference(lambda, mu);
  if (!v) throw InvalidInput("lambda - mu is not in the root lattice");
  for (int x : *v)
    if (x < 0) throw InvalidInput("lambda - mu is not in the positive root cone");
  return alt ? mu[i] + (*v)[i] : mu[i] - (*v)[i];
}

std::string weight_to_string(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s + ")";
}

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer list: " + s);
    }
    if (used != item.size()) throw InvalidInput("not an integer list: " + s);
    out.push_back(v);
  }
  return out;
}

}  // namespace klr
