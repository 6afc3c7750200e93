#include "klr/klr_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klr {

template <class C>
void KLRElement<C>::add(const Monomial& m, const C& c) {
  if (klr::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (klr::is_zero(it->second)) terms_.erase(it);
}

template <class C>
KLRElement<C>& KLRElement<C>::operator+=(const KLRElement& o) {
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

template <class C>
KLRElement<C>& KLRElement<C>::operator-=(const KLRElement& o) {
  for (auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

template <class C>
KLRElement<C> KLRElement<C>::scaled(const C& c) const {
  KLRElement r;
  if (klr::is_zero(c)) return r;
  for (auto& [m, x] : terms_) r.add(m, x * c);
  return r;
}

template <class C>
void KLRElement<C>::add_scaled(const KLRElement& o, const C& c) {
  if (klr::is_zero(c)) return;
  for (auto& [m, x] : o.terms_) add(m, x * c);
}

template <class C>
C KLRElement<C>::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? C(0) : it->second;
}

std::shared_ptr<const SymmetricGroup> symmetric_group(int n) {
  return std::make_shared<const SymmetricGroup>(n);
}

template <class C>
KLRAlgebra<C>::KLRAlgebra(const Quiver& q, RootVector nu, bool deformed)
    : quiver_(q), nu_(std::move(nu)), deformed_(deformed) {
  if (static_cast<int>(nu_.size()) != q.size()) throw InvalidInput("content has the wrong rank");
  n_ = total_height(nu_);
  group_ = symmetric_group(n_);
  words_ = words_of(nu_);
  for (int j = 0; j < nwords(); ++j) word_lookup_[words_[j]] = j;
  const int order = group_->order();
  top_.resize(static_cast<size_t>(order) * nwords());
  crossing_degree_.resize(top_.size());
  for (int w = 0; w < order; ++w) {
    const Perm& p = group_->perm(w);
    for (int j = 0; j < nwords(); ++j) {
      top_[w * nwords() + j] = word_index(group_->act(w, words_[j]));
      int d = 0;
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
          if (p[a] > p[b]) d += crossing_degree(q, words_[j][a], words_[j][b]);
      crossing_degree_[w * nwords() + j] = d;
    }
  }
}

template <class C>
int KLRAlgebra<C>::word_index(const Word& w) const {
  auto it = word_lookup_.find(w);
  if (it == word_lookup_.end()) throw InvalidInput("word does not have the algebra's content");
  return it->second;
}

template <class C>
int KLRAlgebra<C>::degree(const Monomial& m) const {
  int d = crossing_degree_[m.perm * nwords() + m.word];
  for (int p = 0; p < n_; ++p) d += 2 * m.dots[p];
  return d;
}

template <class C>
bool KLRAlgebra<C>::homogeneous(const Element& x) const {
  if (x.is_zero()) return true;
  int d = degree(x.terms().begin()->first);
  for (auto& [m, c] : x.terms())
    if (degree(m) != d) return false;
  return true;
}

template <class C>
int KLRAlgebra<C>::degree(const Element& x) const {
  if (x.is_zero()) throw std::logic_error("degree of zero element");
  if (!homogeneous(x)) throw std::logic_error("element is not homogeneous");
  return degree(x.terms().begin()->first);
}

template <class C>
Monomial KLRAlgebra<C>::monomial(int perm, int word, const Exps& dots) const {
  Monomial m;
  m.perm = static_cast<uint16_t>(perm);
  m.word = static_cast<uint16_t>(word);
  m.dots = dots;
  return m;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::unit() const {
  Element r;
  for (int j = 0; j < nwords(); ++j) r.add(monomial(0, j), C(1));
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::idempotent(int word) const {
  return Element(monomial(0, word), C(1));
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::generator(const Generator& g) const {
  if (g.kind == Generator::Idempotent) {
    if (g.index < 0 || g.index >= nwords()) throw InvalidInput("idempotent word index out of range");
    return idempotent(g.index);
  }
  const int limit = g.kind == Generator::Dot ? n_ : n_ - 1;
  if (g.index < 0 || g.index >= limit) throw InvalidInput("generator strand out of range");
  Element r;
  for (int j = 0; j < nwords(); ++j) {
    if (g.word >= 0 && g.word != j) continue;
    Exps e{};
    int perm = 0;
    if (g.kind == Generator::Dot) e[g.index] = 1;
    else perm = group_->left_mult(g.index, 0);
    r.add(monomial(perm, j, e), C(1));
  }
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::straighten(const std::vector<Generator>& product) {
  Element r = unit();
  for (auto it = product.rbegin(); it != product.rend(); ++it) {
    const Generator& g = *it;
    if (g.kind == Generator::Idempotent) {
      r = left_idempotent(g.index, r);
      continue;
    }
    if (g.word >= 0) r = left_idempotent(g.word, r);
    if (g.kind == Generator::Dot) {
      if (g.index < 0 || g.index >= n_) throw InvalidInput("dot strand out of range");
      r = left_dot(g.index, r);
    } else {
      if (g.index < 0 || g.index + 1 >= n_) throw InvalidInput("crossing strand out of range");
      r = left_crossing(g.index, r);
    }
  }
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::left_idempotent(int word, const Element& x) const {
  Element r;
  for (auto& [m, c] : x.terms())
    if (top_word(m) == word) r.add(m, c);
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::right_dots(const Element& x, const Exps& a) const {
  Element r;
  for (auto& [m0, c] : x.terms()) {
    Monomial m = m0;
    for (int p = 0; p < n_; ++p) m.dots[p] = static_cast<uint8_t>(m.dots[p] + a[p]);
    r.add(m, c);
  }
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::left_crossing(int k, const Element& x) {
  Element r;
  for (auto& [m, c] : x.terms()) {
    const Element& base = crossing_memo(k, m.perm, m.word);
    for (auto& [bm0, bc] : base.terms()) {
      Monomial bm = bm0;
      for (int p = 0; p < n_; ++p) bm.dots[p] = static_cast<uint8_t>(bm.dots[p] + m.dots[p]);
      r.add(bm, bc * c);
    }
  }
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::left_dot(int p, const Element& x) {
  Element r;
  for (auto& [m, c] : x.terms()) {
    const Element& base = dot_memo(p, m.perm, m.word);
    for (auto& [bm0, bc] : base.terms()) {
      Monomial bm = bm0;
      for (int s = 0; s < n_; ++s) bm.dots[s] = static_cast<uint8_t>(bm.dots[s] + m.dots[s]);
      r.add(bm, bc * c);
    }
  }
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::left_poly(const DotPoly<C>& f, const Element& x) {
  Element r;
  for (auto& [e, c] : f) {
    Element t = x;
    for (int p = 0; p < n_; ++p)
      for (int k = 0; k < e[p]; ++k) t = left_dot(p, t);
    r.add_scaled(t, c);
  }
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::letters_times(const Letters& l, int word) {
  Element r = idempotent(word);
  for (auto it = l.rbegin(); it != l.rend(); ++it) r = left_crossing(*it, r);
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::mul_monomials(const Monomial& a, const Monomial& b) {
  if (a.word != top_word(b)) return {};
  Element t(monomial(b.perm, b.word), C(1));
  for (int p = 0; p < n_; ++p)
    for (int k = 0; k < a.dots[p]; ++k) t = left_dot(p, t);
  const Letters& u = group_->word(a.perm);
  for (auto it = u.rbegin(); it != u.rend(); ++it) t = left_crossing(*it, t);
  return right_dots(t, b.dots);
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::mul(const Element& a, const Element& b) {
  Element r;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      if (ma.word != top_word(mb)) continue;
      r.add_scaled(mul_monomials(ma, mb), ca * cb);
    }
  return r;
}

template <class C>
const typename KLRAlgebra<C>::Element& KLRAlgebra<C>::crossing_memo(int k, int perm, int word) {
  uint64_t key = (static_cast<uint64_t>(k) * group_->order() + perm) * nwords() + word;
  auto it = crossing_memo_.find(key);
  if (it != crossing_memo_.end()) return it->second;
  Element r = compute_crossing(k, perm, word);
  return crossing_memo_.emplace(key, std::move(r)).first->second;
}

template <class C>
const typename KLRAlgebra<C>::Element& KLRAlgebra<C>::dot_memo(int p, int perm, int word) {
  uint64_t key = (static_cast<uint64_t>(p) * group_->order() + perm) * nwords() + word;
  auto it = dot_memo_.find(key);
  if (it != dot_memo_.end()) return it->second;
  Element r = compute_dot(p, perm, word);
  return dot_memo_.emplace(key, std::move(r)).first->second;
}

template <class C>
C KLRAlgebra<C>::h_power(int e) const {
  if (e == 0) return C(1);
  if constexpr (std::is_same_v<C, HPoly>) {
    HPoly r(1);
    for (int k = 0; k < e; ++k) r *= HPoly::h();
    return r;
  } else {
    throw std::logic_error("deformation parameter needs polynomial coefficients");
  }
}

template <class C>
DotPoly<C> KLRAlgebra<C>::from_q(const QPolynomial& q, int ku, int kv) const {
  DotPoly<C> f;
  for (auto& [e, c] : q.terms) {
    Exps x{};
    x[ku] = static_cast<uint8_t>(x[ku] + e[0]);
    x[kv] = static_cast<uint8_t>(x[kv] + e[1]);
    C v = h_power(e[2]) * C(static_cast<long>(c));
    auto [it, ins] = f.try_emplace(x, v);
    if (!ins) {
      it->second += v;
      if (is_zero(it->second)) f.erase(it);
    }
  }
  return f;
}

template <class C>
DotPoly<C> KLRAlgebra<C>::bigon_poly(int a, int b, int k) const {
  return from_q(qpoly(quiver_, a, b, deformed_), k, k + 1);
}

template <class C>
DotPoly<C> KLRAlgebra<C>::braid_poly(const Word& below, int r) const {
  DotPoly<C> f;
  const int a = below[r], b = below[r + 1];
  if (a != below[r + 2] || a == b) return f;
  // (Q(y_r, y_{r+1}) - Q(y_{r+2}, y_{r+1})) / (y_r - y_{r+2})
  QPolynomial q = qpoly(quiver_, a, b, deformed_);
  for (auto& [e, c] : q.terms) {
    for (int t = 0; t < e[0]; ++t) {
      Exps x{};
      x[r] = static_cast<uint8_t>(e[0] - 1 - t);
      x[r + 2] = static_cast<uint8_t>(t);
      x[r + 1] = static_cast<uint8_t>(e[1]);
      C v = h_power(e[2]) * C(static_cast<long>(c));
      auto [it, ins] = f.try_emplace(x, v);
      if (!ins) {
        it->second += v;
        if (is_zero(it->second)) f.erase(it);
      }
    }
  }
  return f;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::braid_correction(const Letters& cur, int pos, int word) {
  // psi_cur e(j) = psi_next e(j) + psi_prefix D psi_suffix e(j)
  Letters suffix(cur.begin() + pos + 3, cur.end());
  const int x = cur[pos], y = cur[pos + 1];
  const int r = std::min(x, y);
  const int suffix_perm = group_->from_letters(suffix);
  const Word& below = words_[top_word(suffix_perm, word)];
  DotPoly<C> d = braid_poly(below, r);
  if (d.empty()) return {};
  if (x == r)
    for (auto& [e, c] : d) c = -c;
  Element t = left_poly(d, letters_times(suffix, word));
  for (int k = pos - 1; k >= 0; --k) t = left_crossing(cur[k], t);
  return t;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::reduced_word_nf(const Letters& u, int word) {
  Element r;
  Letters cur = u;
  for (const WordMove& m : group_->path_to_canonical(u)) {
    if (m.braid) r += braid_correction(cur, m.pos, word);
    apply_move(cur, m);
  }
  r.add(monomial(group_->from_letters(u), word), C(1));
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::compute_crossing(int k, int perm, int word) {
  const int sw = group_->left_mult(k, perm);
  if (group_->length(sw) > group_->length(perm)) {
    Letters u{static_cast<uint8_t>(k)};
    const Letters& w = group_->word(perm);
    u.insert(u.end(), w.begin(), w.end());
    return reduced_word_nf(u, word);
  }
  // rewrite the canonical word of perm so that it starts with k, then use psi_k^2
  Letters target{static_cast<uint8_t>(k)};
  target.insert(target.end(), group_->word(sw).begin(), group_->word(sw).end());
  Element corrections;
  Letters cur = group_->word(perm);
  for (const WordMove& m : group_->path_from_canonical(target)) {
    if (m.braid) corrections += braid_correction(cur, m.pos, word);
    apply_move(cur, m);
  }
  Element r;
  const Word& below = words_[top_word(sw, word)];
  if (below[k] != below[k + 1])
    r = left_poly(bigon_poly(below[k], below[k + 1], k), Element(monomial(sw, word), C(1)));
  if (!corrections.is_zero()) r += left_crossing(k, corrections);
  return r;
}

template <class C>
typename KLRAlgebra<C>::Element KLRAlgebra<C>::compute_dot(int p, int perm, int word) {
  if (perm == 0) {
    Exps e{};
    e[p] = 1;
    return Element(monomial(0, word, e), C(1));
  }
  const int k = group_->word(perm)[0];
  const int rest = group_->left_mult(k, perm);
  const int q = p == k ? k + 1 : (p == k + 1 ? k : p);
  Element r = left_crossing(k, dot_memo(q, rest, word));
  const Word& below = words_[top_word(rest, word)];
  if (below[k] == below[k + 1]) {
    if (p == k + 1) r.add(monomial(rest, word), C(1));
    if (p == k) r.add(monomial(rest, word), C(-1));
  }
  return r;
}

template <class C>
int KLRAlgebra<C>::block_min_degree(int top, int bottom) const {
  int best = 1 << 20;
  for (int w = 0; w < group_->order(); ++w)
    if (top_word(w, bottom) == top) best = std::min(best, crossing_degree_[w * nwords() + bottom]);
  return best;
}

template <class C>
std::vector<Monomial> KLRAlgebra<C>::block_basis(int top, int bottom, int degree) const {
  std::vector<Monomial> out;
  for (int w = 0; w < group_->order(); ++w) {
    if (top_word(w, bottom) != top) continue;
    int rest = degree - crossing_degree_[w * nwords() + bottom];
    if (rest < 0 || rest % 2) continue;
    int total = rest / 2;
    if (n_ == 0) {
      if (total == 0) out.push_back(monomial(w, bottom));
      continue;
    }
    // compositions of total into n parts, lexicographically decreasing in the first part
    Exps e{};
    std::vector<int> parts(n_, 0);
    parts[0] = total;
    while (true) {
      for (int p = 0; p < n_; ++p) e[p] = static_cast<uint8_t>(parts[p]);
      out.push_back(monomial(w, bottom, e));
      int j = n_ - 2;
      while (j >= 0 && parts[j] == 0) --j;
      if (j < 0) break;
      --parts[j];
      int tail = parts[n_ - 1];
      parts[n_ - 1] = 0;
      parts[j + 1] = tail + 1;
    }
  }
  return out;
}

template <class C>
std::string KLRAlgebra<C>::monomial_to_string(const Monomial& m) const {
  std::ostringstream os;
  const Letters& w = group_->word(m.perm);
  bool any = false;
  for (auto l : w) {
    os << (any ? " " : "") << "psi" << int(l) + 1;
    any = true;
  }
  for (int p = 0; p < n_; ++p) {
    if (m.dots[p] == 0) continue;
    os << (any ? " " : "") << "y" << p + 1;
    if (m.dots[p] > 1) os << "^" << int(m.dots[p]);
    any = true;
  }
  os << (any ? " " : "") << "e(";
  for (int p = 0; p < n_; ++p) os << (p ? "," : "") << quiver_.name(words_[m.word][p]);
  os << ")";
  return os.str();
}

template <class C>
std::string KLRAlgebra<C>::to_string(const Element& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto& [m, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + klr::to_string(c) + ") " + monomial_to_string(m);
  }
  return s;
}

KLRElement<Rational> specialize(const KLRElement<HPoly>& x, const Rational& h) {
  KLRElement<Rational> r;
  for (auto& [m, c] : x.terms()) r.add(m, c.eval(h));
  return r;
}

template class KLRElement<Rational>;
template class KLRElement<HPoly>;
template class KLRAlgebra<Rational>;
template class KLRAlgebra<HPoly>;

}  // namespace klr
