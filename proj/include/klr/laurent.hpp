#pragma once

#include <map>
#include <string>

namespace klr {

// Laurent polynomial in one variable with integer coefficients.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int exp, long long c = 1);
  static Laurent quantum_integer(int k);  // [k] = (q^k - q^-k)/(q - q^-1)

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const { return Laurent(*this) += o; }
  Laurent operator-(const Laurent& o) const { return Laurent(*this) -= o; }
  Laurent operator*(const Laurent& o) const;
  Laurent shift(int k) const;
  bool operator==(const Laurent& o) const { return c_ == o.c_; }

  bool is_zero() const { return c_.empty(); }
  long long coeff(int exp) const;
  long long at_one() const;
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }
  const std::map<int, long long>& terms() const { return c_; }
  void add(int exp, long long c);

  std::string to_string(const std::string& var = "t") const;

 private:
  std::map<int, long long> c_;
};

}  // namespace klr
