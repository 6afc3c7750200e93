#include "klr/coeff.hpp"

namespace klr {

void HPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational HPoly::eval(const Rational& h) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * h + *it;
  return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

HPoly HPoly::operator-() const {
  HPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

HPoly HPoly::operator*(const HPoly& o) const {
  HPoly r;
  if (zero() || o.zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
  r.trim();
  return r;
}

std::string HPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (sgn(c_[k]) == 0) continue;
    if (!s.empty()) s += " + ";
    std::string c = c_[k].get_str();
    if (k == 0) s += c;
    else s += (c == "1" ? "" : c + "*") + (k == 1 ? std::string("h") : "h^" + std::to_string(k));
  }
  return s;
}

}  // namespace klr
