#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace klr {

using Rational = mpq_class;

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline std::string to_string(const Rational& c) { return c.get_str(); }

// Polynomial in the deformation parameter h with rational coefficients.
class HPoly {
 public:
  HPoly() = default;
  HPoly(long c) { if (c != 0) c_.push_back(Rational(c)); }
  HPoly(const Rational& c) { if (sgn(c) != 0) c_.push_back(c); }
  static HPoly h() { HPoly p; p.c_ = {Rational(0), Rational(1)}; return p; }

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  Rational eval(const Rational& h) const;

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly operator+(const HPoly& o) const { return HPoly(*this) += o; }
  HPoly operator-(const HPoly& o) const { return HPoly(*this) -= o; }
  HPoly operator-() const;
  HPoly operator*(const HPoly& o) const;
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }
  bool operator==(const HPoly& o) const { return c_ == o.c_; }
  bool operator!=(const HPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const HPoly& c) { return c.zero(); }
inline std::string to_string(const HPoly& c) { return c.str(); }

}  // namespace klr
