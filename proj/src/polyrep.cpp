#include "klr/polyrep.hpp"

#include <sstream>

namespace klr {

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add(Key{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int k) {
  MultiPoly p;
  Key e{};
  e[k] = 1;
  p.add(e, 1);
  return p;
}

MultiPoly MultiPoly::h() { return variable(kMaxStrands); }

void MultiPoly::add(const Key& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, ins] = t_.try_emplace(k, c);
  if (ins) return;
  it->second += c;
  if (sgn(it->second) == 0) t_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [k, c] : o.t_) add(k, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [k, c] : o.t_) add(k, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (auto& [a, ca] : t_)
    for (auto& [b, cb] : o.t_) {
      Key e;
      for (size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
      r.add(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r;
  for (auto& [k, x] : t_) r.add(k, x * c);
  return r;
}

MultiPoly MultiPoly::swap_vars(int a, int b) const {
  MultiPoly r;
  for (auto& [k0, c] : t_) {
    Key k = k0;
    std::swap(k[a], k[b]);
    r.add(k, c);
  }
  return r;
}

MultiPoly MultiPoly::divided_difference(int k) const {
  // x_k^p x_{k+1}^q  ->  sign * (x_k x_{k+1})^min * sum_t x_k^(d-1-t) x_{k+1}^t, d = |p - q|
  MultiPoly r;
  for (auto& [e, c] : t_) {
    int p = e[k], q = e[k + 1];
    if (p == q) continue;
    int lo = std::min(p, q), d = std::abs(p - q);
    Rational s = p > q ? c : Rational(-c);
    for (int t = 0; t < d; ++t) {
      Key f = e;
      f[k] = lo + d - 1 - t;
      f[k + 1] = lo + t;
      r.add(f, s);
    }
  }
  return r;
}

MultiPoly MultiPoly::set_h(const Rational& h) const {
  MultiPoly r;
  for (auto& [k0, c] : t_) {
    Key k = k0;
    Rational v = c;
    for (int i = 0; i < k[kMaxStrands]; ++i) v *= h;
    k[kMaxStrands] = 0;
    r.add(k, v);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < kMaxStrands; ++i)
      if (k[i]) os << "*x" << i + 1 << "^" << k[i];
    if (k[kMaxStrands]) os << "*h^" << k[kMaxStrands];
  }
  return os.str();
}

PolynomialRep::PolynomialRep(const Quiver& q, const RootVector& nu, bool deformed)
    : quiver_(q), nu_(nu), deformed_(deformed), n_(total_height(nu)), words_(words_of(nu)) {
  for (int j = 0; j < nwords(); ++j) lookup_[words_[j]] = j;
}

MultiPoly PolynomialRep::factor(int a, int b, int k) const {
  MultiPoly r;
  for (auto& [e, c] : crossing_factor(quiver_, a, b, deformed_).terms) {
    MultiPoly::Key key{};
    key[k] = e[0];
    key[k + 1] = e[1];
    key[kMaxStrands] = e[2];
    r.add(key, Rational(static_cast<long>(c)));
  }
  return r;
}

LabeledPoly PolynomialRep::crossing(int k, const LabeledPoly& f) const {
  LabeledPoly out;
  for (auto& [j, p] : f) {
    const Word& w = words_[j];
    if (w[k] == w[k + 1]) {
      // (s_k f - f) / (x_k - x_{k+1})
      MultiPoly g = p.divided_difference(k).scaled(-1);
      if (!g.is_zero()) out[j] += g;
    } else {
      Word s = w;
      std::swap(s[k], s[k + 1]);
      MultiPoly g = factor(w[k], w[k + 1], k) * p.swap_vars(k, k + 1);
      if (!g.is_zero()) out[lookup_.at(s)] += g;
    }
  }
  std::erase_if(out, [](auto& t) { return t.second.is_zero(); });
  return out;
}

LabeledPoly PolynomialRep::dot(int p, const LabeledPoly& f) const {
  LabeledPoly out;
  MultiPoly x = MultiPoly::variable(p);
  for (auto& [j, g] : f) out[j] = g * x;
  return out;
}

LabeledPoly PolynomialRep::idempotent(int word, const LabeledPoly& f) const {
  LabeledPoly out;
  if (auto it = f.find(word); it != f.end()) out[word] = it->second;
  return out;
}

LabeledPoly PolynomialRep::apply(const Generator& g, const LabeledPoly& f) const {
  switch (g.kind) {
    case Generator::Idempotent: return idempotent(g.index, f);
    case Generator::Dot: return dot(g.index, g.word >= 0 ? idempotent(g.word, f) : f);
    case Generator::Crossing: return crossing(g.index, g.word >= 0 ? idempotent(g.word, f) : f);
  }
  return {};
}

LabeledPoly PolynomialRep::apply(const std::vector<Generator>& product, const LabeledPoly& f) const {
  LabeledPoly r = f;
  for (auto it = product.rbegin(); it != product.rend(); ++it) r = apply(*it, r);
  return r;
}

namespace {
MultiPoly lift_coeff(const Rational& c) { return MultiPoly::constant(c); }
MultiPoly lift_coeff(const HPoly& c) {
  MultiPoly r, hp = MultiPoly::constant(1);
  for (int k = 0; k <= c.degree(); ++k) {
    r += hp.scaled(c.coeff(k));
    hp = hp * MultiPoly::h();
  }
  return r;
}
}  // namespace

template <class C>
LabeledPoly PolynomialRep::apply(const KLRAlgebra<C>& alg, const KLRElement<C>& x, const LabeledPoly& f) const {
  LabeledPoly out;
  for (auto& [m, c] : x.terms()) {
    LabeledPoly g = idempotent(m.word, f);
    if (g.empty()) continue;
    for (int p = 0; p < n_; ++p)
      for (int k = 0; k < m.dots[p]; ++k) g = dot(p, g);
    const Letters& w = alg.group().word(m.perm);
    for (auto it = w.rbegin(); it != w.rend(); ++it) g = crossing(*it, g);
    MultiPoly coeff = lift_coeff(c);
    for (auto& [j, poly] : g) out[j] += poly * coeff;
  }
  std::erase_if(out, [](auto& t) { return t.second.is_zero(); });
  return out;
}

template LabeledPoly PolynomialRep::apply(const KLRAlgebra<Rational>&, const KLRElement<Rational>&,
                                          const LabeledPoly&) const;
template LabeledPoly PolynomialRep::apply(const KLRAlgebra<HPoly>&, const KLRElement<HPoly>&,
                                          const LabeledPoly&) const;

bool labeled_equal(const LabeledPoly& a, const LabeledPoly& b) {
  auto clean = [](LabeledPoly x) {
    std::erase_if(x, [](auto& t) { return t.second.is_zero(); });
    return x;
  };
  return clean(a) == clean(b);
}

LabeledPoly labeled_add(const LabeledPoly& a, const LabeledPoly& b, const Rational& c) {
  LabeledPoly r = a;
  for (auto& [j, p] : b) r[j] += p.scaled(c);
  std::erase_if(r, [](auto& t) { return t.second.is_zero(); });
  return r;
}

}  // namespace klr
