#include "klr/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "klr/kernels.hpp"

namespace klr {

GenPoly GenPoly::constant(int ngens, const Rational& c) {
  GenPoly p(ngens);
  p.add(Exps(ngens, 0), c);
  return p;
}

GenPoly GenPoly::generator(int ngens, int i) {
  GenPoly p(ngens);
  Exps e(ngens, 0);
  e[i] = 1;
  p.add(e, 1);
  return p;
}

void GenPoly::add(const Exps& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  for (auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

GenPoly GenPoly::operator*(const GenPoly& o) const {
  GenPoly r(ngens_);
  for (auto& [a, x] : terms_)
    for (auto& [b, y] : o.terms_) {
      Exps e = a;
      for (int i = 0; i < ngens_; ++i) e[i] += b[i];
      r.add(e, x * y);
    }
  return r;
}

GenPoly GenPoly::scaled(const Rational& c) const {
  GenPoly r(ngens_);
  for (auto& [e, x] : terms_) r.add(e, x * c);
  return r;
}

std::string GenPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (a != 1 || unit) os << a.get_str() << (unit ? "" : "*");
    bool any = false;
    for (int i = 0; i < ngens_; ++i) {
      if (e[i] == 0) continue;
      os << (any ? "*" : "") << names[i];
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
  }
  return os.str();
}

GradedRingPresentation::GradedRingPresentation(std::vector<int> gen_degrees, std::vector<GenPoly> relations,
                                               std::vector<std::string> names)
    : gen_degrees_(std::move(gen_degrees)), relations_(std::move(relations)), names_(std::move(names)) {
  for (int d : gen_degrees_)
    if (d <= 0) throw InvalidInput("generator degrees must be positive");
  build();
}

int GradedRingPresentation::degree(const GenPoly::Exps& e) const {
  int d = 0;
  for (int i = 0; i < ngens(); ++i) d += e[i] * gen_degrees_[i];
  return d;
}

std::vector<GenPoly::Exps> GradedRingPresentation::monomials(int d) const {
  std::vector<GenPoly::Exps> out;
  GenPoly::Exps e(ngens(), 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == ngens()) {
      if (rest == 0) out.push_back(e);
      return;
    }
    for (int a = 0; a * gen_degrees_[i] <= rest; ++a) {
      e[i] = a;
      rec(i + 1, rest - a * gen_degrees_[i]);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

void GradedRingPresentation::build() {
  std::vector<int> rel_degree;
  for (const GenPoly& r : relations_) {
    if (r.is_zero()) {
      rel_degree.push_back(-1);
      continue;
    }
    int d = degree(r.terms().begin()->first);
    for (auto& [e, c] : r.terms())
      if (degree(e) != d) throw InvalidInput("relation is not homogeneous");
    rel_degree.push_back(d);
  }
  const int maxgen = gen_degrees_.empty() ? 0 : *std::max_element(gen_degrees_.begin(), gen_degrees_.end());
  // grow until the quotient vanishes in maxgen consecutive degrees; every
  // higher monomial is then a generator times a vanishing one
  int zero_run = 0;
  int top = 0;
  for (int d = 0;; ++d) {
    Space& S = spaces_[d];
    S.cols = monomials(d);
    for (size_t c = 0; c < S.cols.size(); ++c) S.index[S.cols[c]] = static_cast<int>(c);
    S.ideal = Echelon(static_cast<int>(S.cols.size()));
    std::vector<SparseVec> rows;
    for (size_t r = 0; r < relations_.size(); ++r) {
      if (rel_degree[r] < 0 || rel_degree[r] > d) continue;
      for (const auto& m : monomials(d - rel_degree[r])) {
        SparseVec v;
        for (auto& [e, c] : relations_[r].terms()) {
          GenPoly::Exps s = e;
          for (int i = 0; i < ngens(); ++i) s[i] += m[i];
          v.emplace_back(S.index.at(s), c);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(v));
      }
    }
    extend_basis(S.ideal, rows);
    auto free = S.ideal.free_columns();
    for (int c : free) basis_[d].push_back(S.cols[c]);
    if (!free.empty()) top = d;
    zero_run = free.empty() ? zero_run + 1 : 0;
    if (ngens() == 0 || (d > top && zero_run >= maxgen)) {
      last_ = d;
      break;
    }
    if (d > 1024) throw std::runtime_error("presentation does not appear finite-dimensional");
  }
}

Laurent GradedRingPresentation::hilbert_series() const {
  Laurent h;
  for (auto& [d, b] : basis_) h.add(d, static_cast<long long>(b.size()));
  return h;
}

int GradedRingPresentation::dim() const {
  int n = 0;
  for (auto& [d, b] : basis_) n += static_cast<int>(b.size());
  return n;
}

GenPoly GradedRingPresentation::normal_form(const GenPoly& p) const {
  std::map<int, SparseVec> by_degree;
  GenPoly out(ngens());
  for (auto& [e, c] : p.terms()) {
    int d = degree(e);
    if (d > last_) continue;
    by_degree[d].emplace_back(spaces_.at(d).index.at(e), c);
  }
  for (auto& [d, v] : by_degree) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const Space& S = spaces_.at(d);
    for (auto& [c, x] : S.ideal.reduce(v)) out.add(S.cols[c], x);
  }
  return out;
}

GenPoly complete_homogeneous(int k, int m) {
  std::vector<GenPoly> h{GenPoly::constant(k, 1)};
  for (int j = 1; j <= m; ++j) {
    GenPoly s(k);
    for (int a = 1; a <= std::min(j, k); ++a)
      s += (GenPoly::generator(k, a - 1) * h[j - a]).scaled(a % 2 ? 1 : -1);
    h.push_back(s);
  }
  return h[m];
}

GradedRingPresentation grassmannian_presentation(int k, int n) {
  if (k < 0 || n < 0 || k > n) throw InvalidInput("need 0 <= k <= n");
  std::vector<int> deg;
  std::vector<std::string> names;
  for (int j = 1; j <= k; ++j) {
    deg.push_back(2 * j);
    names.push_back("c" + std::to_string(j));
  }
  std::vector<GenPoly> rels;
  for (int m = n - k + 1; m <= n; ++m) rels.push_back(complete_homogeneous(k, m));
  return GradedRingPresentation(deg, rels, names);
}

std::vector<ChernClass> chern_generators(const RootVector& nu) {
  std::vector<ChernClass> out;
  for (int i = 0; i < static_cast<int>(nu.size()); ++i)
    for (int k = 1; k <= nu[i]; ++k) out.push_back({i, k});
  return out;
}

std::vector<std::string> chern_names(const Quiver& q, const RootVector& nu) {
  std::vector<std::string> out;
  for (const auto& c : chern_generators(nu)) out.push_back("c_{" + q.name(c.vertex) + "," + std::to_string(c.k) + "}");
  return out;
}

KLRElement<Rational> rho(RationalKLR& alg, const ChernClass& c) {
  KLRElement<Rational> r;
  const int n = alg.strands();
  for (int w = 0; w < alg.nwords(); ++w) {
    std::vector<int> pos;
    for (int p = 0; p < n; ++p)
      if (alg.words()[w][p] == c.vertex) pos.push_back(p);
    const int m = static_cast<int>(pos.size());
    if (c.k > m) continue;
    // subsets of size k of the labelled strands
    std::vector<int> sel(m, 0);
    std::fill(sel.end() - c.k, sel.end(), 1);
    do {
      Exps e{};
      for (int t = 0; t < m; ++t)
        if (sel[t]) e[pos[t]] = 1;
      r.add(alg.monomial(0, w, e), 1);
    } while (std::next_permutation(sel.begin(), sel.end()));
  }
  return r;
}

bool rho_central(RationalKLR& alg, const KLRElement<Rational>& x) {
  std::vector<Generator> gens;
  for (int p = 0; p < alg.strands(); ++p) gens.push_back({Generator::Dot, p, -1});
  for (int k = 0; k + 1 < alg.strands(); ++k) gens.push_back({Generator::Crossing, k, -1});
  for (int w = 0; w < alg.nwords(); ++w) gens.push_back({Generator::Idempotent, w, -1});
  for (const auto& g : gens) {
    auto e = alg.generator(g);
    if (!(alg.mul(e, x) == alg.mul(x, e))) return false;
  }
  return true;
}

GradedRingMap::GradedRingMap(const GradedRingPresentation& src, const FiniteAlgebra& target,
                             std::vector<SparseVec> images)
    : src_(src), target_(target), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src.ngens()) throw InvalidInput("one image per generator required");
}

SparseVec GradedRingMap::evaluate(const GenPoly& p) const {
  SparseVec out;
  for (auto& [e, c] : p.terms()) {
    SparseVec m = target_.unit();
    for (int i = 0; i < src_.ngens(); ++i)
      for (int a = 0; a < e[i]; ++a) m = target_.mul(m, images_[i]);
    out = sparse_add(out, m, c);
  }
  return out;
}

int GradedRingMap::first_failing_relation() const {
  for (size_t r = 0; r < src_.relations().size(); ++r)
    if (!evaluate(src_.relations()[r]).empty()) return static_cast<int>(r);
  return -1;
}

std::vector<SparseVec> GradedRingMap::basis_images(int d) const {
  std::vector<SparseVec> out;
  auto it = src_.basis().find(d);
  if (it == src_.basis().end()) return out;
  for (const auto& e : it->second) {
    GenPoly m(src_.ngens());
    m.add(e, 1);
    out.push_back(evaluate(m));
  }
  return out;
}

std::vector<SparseVec> kappa_a(const CyclotomicAlgebra& a) {
  std::vector<SparseVec> out;
  for (const auto& c : chern_generators(a.content())) out.push_back(a.to_vector(a.project(rho(a.klr(), c))));
  return out;
}

Echelon generated_subalgebra(const FiniteAlgebra& a, const std::vector<SparseVec>& gens) {
  Echelon span(a.dim());
  std::vector<SparseVec> frontier;
  if (span.insert(a.unit())) frontier.push_back(a.unit());
  while (!frontier.empty()) {
    std::vector<SparseVec> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        SparseVec p = a.mul(f, g);
        SparseVec r = span.reduce(p);
        if (!r.empty() && span.insert_reduced(r)) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return span;
}

KirwanReport kirwan_check(const CyclotomicAlgebra& a, const CenterBasis& z) {
  KirwanReport rep;
  CyclotomicView view(a);
  auto imgs = kappa_a(a);
  rep.images_central = true;
  for (const auto& v : imgs) rep.images_central = rep.images_central && is_central(view, v);
  Echelon sub = generated_subalgebra(view, imgs);
  rep.center_series = z.hilbert_series();
  for (const auto& r : sub.rows()) rep.image_series.add(view.degree(r.back().first), 1);
  bool inside = true;
  for (const auto& r : sub.rows()) inside = inside && z.coordinates(r).has_value();
  rep.generates = inside && sub.rank() == z.dim();
  return rep;
}

PhiReport phi_check(const CyclotomicAlgebra& a, const CenterBasis& z) {
  PhiReport rep;
  if (a.quiver().size() != 1) throw InvalidInput("phi check is implemented for the sl2 quiver");
  rep.n = a.lambda()[0];
  rep.k = a.content()[0];
  CyclotomicView view(a);
  auto pres = grassmannian_presentation(rep.k, rep.n);
  rep.cohomology = pres.hilbert_series();
  rep.center = z.hilbert_series();

  // c_j -> e_j(y_1, ..., y_k) as a dot polynomial acting on the unit
  RationalKLR& alg = a.klr();
  std::vector<SparseVec> images;
  for (int j = 1; j <= rep.k; ++j) {
    DotPoly<Rational> f;
    std::vector<int> sel(rep.k, 0);
    std::fill(sel.end() - j, sel.end(), 1);
    do {
      Exps e{};
      for (int t = 0; t < rep.k; ++t) e[t] = static_cast<uint8_t>(sel[t]);
      f[e] += 1;
    } while (std::next_permutation(sel.begin(), sel.end()));
    images.push_back(a.to_vector(a.project(alg.left_poly(f, alg.unit()))));
  }
  GradedRingMap phi(pres, view, images);

  int bad = phi.first_failing_relation();
  rep.well_defined = bad < 0;
  if (!rep.well_defined) rep.witness = "relation " + pres.relations()[bad].to_string(pres.names()) + " is not sent to 0";
  rep.dims_match = rep.cohomology == rep.center;
  if (!rep.dims_match && rep.witness.empty())
    rep.witness = "H^* has series " + rep.cohomology.to_string() + " but the center has " + rep.center.to_string();

  rep.injective = true;
  bool onto = true;
  for (auto& [d, mons] : pres.basis()) {
    auto imgs = phi.basis_images(d);
    for (const auto& v : imgs)
      if (!z.coordinates(v)) {
        onto = false;
        if (rep.witness.empty()) rep.witness = "image in degree " + std::to_string(d) + " is not central";
      }
    if (rank_of(imgs, a.dim()) != static_cast<int>(imgs.size())) {
      rep.injective = false;
      if (rep.witness.empty()) rep.witness = "kernel in degree " + std::to_string(d);
    }
  }
  rep.bijective = rep.well_defined && rep.injective && onto && pres.dim() == z.dim();

  // kappa_a(rho(c)) against phi(kappa_g(c)) on each Chern generator
  auto kap = kappa_a(a);
  rep.square_commutes = true;
  for (int j = 1; j <= rep.k; ++j) {
    GenPoly cj = pres.normal_form(GenPoly::generator(rep.k, j - 1));
    if (phi.evaluate(cj) != kap[j - 1]) {
      rep.square_commutes = false;
      if (rep.witness.empty()) rep.witness = "square fails on c" + std::to_string(j);
    }
  }
  return rep;
}

PhiReport phi_check(int k, int n) {
  if (k < 0 || n < 0 || k > n) throw InvalidInput("need 0 <= k <= n");
  Quiver a1 = Quiver::type_a(1);
  CyclotomicAlgebra a(a1, {n}, {k});
  CyclotomicView view(a);
  return phi_check(a, center_basis(view));
}

}  // namespace klr
