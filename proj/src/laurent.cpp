#include "klr/laurent.hpp"

#include <cstdlib>

namespace klr {

Laurent Laurent::monomial(int exp, long long c) {
  Laurent l;
  l.add(exp, c);
  return l;
}

Laurent Laurent::quantum_integer(int k) {
  Laurent l;
  int a = std::abs(k);
  long long sign = k < 0 ? -1 : 1;
  for (int e = -(a - 1); e <= a - 1; e += 2) l.add(e, sign);
  return l;
}

void Laurent::add(int exp, long long c) {
  if (c == 0) return;
  auto& slot = c_[exp];
  slot += c;
  if (slot == 0) c_.erase(exp);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto [e, c] : o.c_) add(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto [e, c] : o.c_) add(e, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (auto [e1, c1] : c_)
    for (auto [e2, c2] : o.c_) r.add(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::shift(int k) const {
  Laurent r;
  for (auto [e, c] : c_) r.c_[e + k] = c;
  return r;
}

long long Laurent::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

long long Laurent::at_one() const {
  long long s = 0;
  for (auto [e, c] : c_) s += c;
  return s;
}

std::string Laurent::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto [e, c] : c_) {
    long long a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace klr
