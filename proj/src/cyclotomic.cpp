#include "klr/cyclotomic.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <sstream>

#include "klr/kernels.hpp"
#include "klr/shapovalov.hpp"

namespace klr {

namespace {

void sort_row(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

KLRElement<HPoly> lift(const KLRElement<Rational>& x) {
  KLRElement<HPoly> r;
  for (auto& [m, c] : x.terms()) r.add(m, HPoly(c));
  return r;
}

}  // namespace

CyclotomicAlgebra::CyclotomicAlgebra(const Quiver& q, Weight lambda, RootVector nu, const BuildOptions& opt)
    : lambda_(std::move(lambda)), nu_(std::move(nu)) {
  if (static_cast<int>(lambda_.size()) != q.size()) throw InvalidInput("lambda has the wrong length");
  if (static_cast<int>(nu_.size()) != q.size()) throw InvalidInput("nu has the wrong length");
  for (int v : nu_)
    if (v < 0) throw InvalidInput("nu must be a nonnegative root vector");
  for (int v : lambda_)
    if (v < 0) throw InvalidInput("lambda must be dominant");
  if (total_height(nu_) > kMaxStrands) throw InvalidInput("too many strands");
  klr_ = std::make_unique<RationalKLR>(q, nu_);
  build(opt);
}

Weight CyclotomicAlgebra::weight() const { return quiver().weight_of(lambda_, nu_); }

bool CyclotomicAlgebra::killed(const Monomial& m) const {
  if (strands() == 0) return false;
  return m.dots[0] >= lambda_[klr_->words()[m.word][0]];
}

CyclotomicAlgebra::Space& CyclotomicAlgebra::space(Block& b, int d) { return b.spaces.at(d); }

void CyclotomicAlgebra::build(const BuildOptions& opt) {
  RationalKLR& alg = *klr_;
  const int W = nwords();
  const int n = strands();
  const SymmetricGroup& G = alg.group();
  ShapovalovOracle shap(quiver(), lambda_);

  blocks_.assign(static_cast<size_t>(W) * W, Block{});
  top_degree_ = INT_MIN;
  for (int t = 0; t < W; ++t)
    for (int b = 0; b < W; ++b) {
      Block& B = blocks_[t * W + b];
      B.top = t;
      B.bottom = b;
      B.oracle = shap.graded_dim(alg.words()[t], alg.words()[b]);
      B.first = alg.block_min_degree(t, b);
      int dotless = INT_MIN;
      for (int w = 0; w < G.order(); ++w)
        if (alg.top_word(w, b) == t) dotless = std::max(dotless, alg.degree(alg.monomial(w, b)));
      int top = B.oracle.is_zero() ? B.first - 2 : B.oracle.max_exp();
      if (!B.oracle.is_zero()) top_degree_ = std::max(top_degree_, top);
      B.last = std::max(top, dotless) + 2;
    }
  if (top_degree_ == INT_MIN) top_degree_ = 0;

  if (opt.degree_cap && *opt.degree_cap < top_degree_) {
    int first_bad = INT_MAX;
    for (const Block& B : blocks_)
      for (auto& [e, c] : B.oracle.terms())
        if (e > *opt.degree_cap) first_bad = std::min(first_bad, e);
    std::ostringstream os;
    os << "uncertified: degree cap " << *opt.degree_cap << " is below the oracle top degree " << top_degree_
       << "; first unverified degree " << first_bad;
    throw UncertifiedBuild(os.str(), first_bad);
  }

  // ideal generators psi_u y_1^{lambda^{m_1}} psi_v e(b), grouped by block and degree
  std::map<std::pair<int, int>, std::vector<Element>> cands;
  if (n > 0) {
    for (int b = 0; b < W; ++b)
      for (int v = 0; v < G.order(); ++v) {
        const int m = alg.top_word(v, b);
        const int lam = lambda_[alg.words()[m][0]];
        Element y(alg.monomial(v, b), 1);
        for (int k = 0; k < lam; ++k) y = alg.left_dot(0, y);
        const int dv = alg.degree(alg.monomial(v, b)) + 2 * lam;
        for (int u = 0; u < G.order(); ++u) {
          const int t = alg.top_word(u, m);
          const int d = dv + alg.degree(alg.monomial(u, m));
          if (d > blocks_[t * W + b].last) continue;
          Element x = y;
          const Letters& lu = G.word(u);
          for (auto it = lu.rbegin(); it != lu.rend(); ++it) x = alg.left_crossing(*it, x);
          if (!x.is_zero()) cands[{t * W + b, d}].push_back(std::move(x));
        }
      }
  }

  for (int blk = 0; blk < W * W; ++blk) {
    Block& B = blocks_[blk];
    for (int d = B.first; d <= B.last; ++d) {
      Space& S = B.spaces[d];
      for (const Monomial& m : alg.block_basis(B.top, B.bottom, d))
        if (!killed(m)) {
          S.index.emplace(m, static_cast<int>(S.cols.size()));
          S.cols.push_back(m);
        }
      S.ideal = Echelon(static_cast<int>(S.cols.size()));
      std::vector<SparseVec> rows;
      if (auto it = cands.find({blk, d}); it != cands.end())
        for (const Element& x : it->second) {
          SparseVec r;
          for (auto& [m, c] : x.terms())
            if (!killed(m)) r.emplace_back(S.index.at(m), c);
          sort_row(r);
          rows.push_back(std::move(r));
        }
      if (auto prev = B.spaces.find(d - 2); prev != B.spaces.end())
        for (const SparseVec& row : prev->second.ideal.rows())
          for (int p = 0; p < n; ++p) {
            SparseVec r;
            for (auto& [c, x] : row) {
              Monomial m = prev->second.cols[c];
              ++m.dots[p];
              if (!killed(m)) r.emplace_back(S.index.at(m), x);
            }
            sort_row(r);
            if (!r.empty()) rows.push_back(std::move(r));
          }
      extend_basis(S.ideal, rows);
      S.free = S.ideal.free_columns();
      const long long expect = B.oracle.coeff(d);
      if (static_cast<long long>(S.free.size()) != expect) {
        std::ostringstream os;
        os << "uncertified: block (" << B.top << "," << B.bottom << ") degree " << d << " has quotient dimension "
           << S.free.size() << " but the oracle gives " << expect;
        throw UncertifiedBuild(os.str(), d);
      }
    }
    for (auto& [d, S] : B.spaces)
      for (int c : S.free) {
        basis_lookup_.emplace(S.cols[c], static_cast<int>(basis_.size()));
        basis_.push_back(S.cols[c]);
      }
  }
}

int CyclotomicAlgebra::basis_index(const Monomial& m) const {
  auto it = basis_lookup_.find(m);
  if (it == basis_lookup_.end()) throw std::logic_error("monomial is not a quotient basis element");
  return it->second;
}

Laurent CyclotomicAlgebra::hilbert_series() const {
  Laurent h;
  for (const Monomial& m : basis_) h.add(degree(m), 1);
  return h;
}

Laurent CyclotomicAlgebra::block_series(int top, int bottom) const {
  Laurent h;
  for (auto& [d, S] : blocks_[top * nwords() + bottom].spaces) h.add(d, static_cast<long long>(S.free.size()));
  return h;
}

Laurent CyclotomicAlgebra::oracle_series() const {
  Laurent h;
  for (const Block& B : blocks_) h += B.oracle;
  return h;
}

CyclotomicAlgebra::Element CyclotomicAlgebra::project(const Element& x) const {
  const int W = nwords();
  std::map<std::pair<int, int>, std::vector<std::pair<Monomial, Rational>>> groups;
  for (auto& [m, c] : x.terms()) {
    if (killed(m)) continue;
    groups[{klr_->top_word(m) * W + m.word, degree(m)}].emplace_back(m, c);
  }
  Element r;
  for (auto& [key, terms] : groups) {
    const Block& B = blocks_[key.first];
    const int d = key.second;
    if (d > B.last) continue;  // certified zero
    const Space& S = B.spaces.at(d);
    SparseVec v;
    for (auto& [m, c] : terms) v.emplace_back(S.index.at(m), c);
    sort_row(v);
    for (auto& [c, val] : S.ideal.reduce(v)) r.add(S.cols[c], val);
  }
  return r;
}

CyclotomicAlgebra::Element CyclotomicAlgebra::mul(const Element& a, const Element& b) const {
  return project(klr_->mul(a, b));
}

CyclotomicAlgebra::Element CyclotomicAlgebra::dot(int p) const {
  return project(klr_->generator({Generator::Dot, p, -1}));
}

CyclotomicAlgebra::Element CyclotomicAlgebra::crossing(int k) const {
  return project(klr_->generator({Generator::Crossing, k, -1}));
}

std::vector<CyclotomicAlgebra::Element> CyclotomicAlgebra::generators() const {
  std::vector<Element> g;
  for (int i = 0; i < nwords(); ++i) g.push_back(idempotent(i));
  for (int p = 0; p < strands(); ++p) g.push_back(dot(p));
  for (int k = 0; k + 1 < strands(); ++k) g.push_back(crossing(k));
  return g;
}

SparseVec CyclotomicAlgebra::to_vector(const Element& x) const {
  SparseVec v;
  for (auto& [m, c] : x.terms()) v.emplace_back(basis_index(m), c);
  sort_row(v);
  return v;
}

CyclotomicAlgebra::Element CyclotomicAlgebra::from_vector(const SparseVec& v) const {
  Element r;
  for (auto& [i, c] : v) r.add(basis_[i], c);
  return r;
}

std::vector<int> CyclotomicAlgebra::nilpotency_orders() const {
  std::vector<int> out;
  for (int p = 0; p < strands(); ++p) {
    Element y = dot(p);
    Element pw = y;
    int order = 1;
    while (!pw.is_zero()) {
      pw = mul(pw, y);
      ++order;
      if (order > top_degree_ + 2) throw std::logic_error("dot is not nilpotent");
    }
    out.push_back(order);
  }
  return out;
}

DeformationReport compare_deformed(const CyclotomicAlgebra& a, bool full) {
  DeformationReport rep;
  DeformedKLR dalg(a.quiver(), a.content(), true);
  RationalKLR& alg = a.klr();
  std::vector<Generator> gens;
  for (int i = 0; i < a.nwords(); ++i) gens.push_back({Generator::Idempotent, i, -1});
  for (int p = 0; p < a.strands(); ++p) gens.push_back({Generator::Dot, p, -1});
  for (int k = 0; k + 1 < a.strands(); ++k) gens.push_back({Generator::Crossing, k, -1});

  auto compare = [&](const KLRElement<HPoly>& deformed, const CyclotomicAlgebra::Element& plain,
                     const std::string& what) {
    ++rep.compared;
    if (a.project(specialize(deformed, Rational(0))) == plain) return;
    if (rep.mismatches++ == 0) rep.first_mismatch = what;
  };
  for (int x = 0; x < a.dim(); ++x) {
    CyclotomicAlgebra::Element bx = a.basis_element(x);
    auto hx = lift(bx);
    for (const Generator& g : gens) {
      auto gh = dalg.generator(g);
      auto gr = alg.generator(g);
      compare(dalg.mul(gh, hx), a.mul(gr, bx), "generator * " + alg.monomial_to_string(a.basis()[x]));
      compare(dalg.mul(hx, gh), a.mul(bx, gr), alg.monomial_to_string(a.basis()[x]) + " * generator");
    }
    if (full)
      for (int y = 0; y < a.dim(); ++y) {
        CyclotomicAlgebra::Element by = a.basis_element(y);
        compare(dalg.mul(hx, lift(by)), a.mul(bx, by),
                alg.monomial_to_string(a.basis()[x]) + " * " + alg.monomial_to_string(a.basis()[y]));
      }
  }
  return rep;
}

bool check_associativity(const CyclotomicAlgebra& a, bool exhaustive, int samples, unsigned seed) {
  const int n = a.dim();
  if (n == 0) return true;
  auto triple = [&](int i, int j, int k) {
    auto x = a.basis_element(i), y = a.basis_element(j), z = a.basis_element(k);
    return a.mul(x, a.mul(y, z)) == a.mul(a.mul(x, y), z);
  };
  if (exhaustive) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!triple(i, j, k)) return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int s = 0; s < samples; ++s)
    if (!triple(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

}  // namespace klr
