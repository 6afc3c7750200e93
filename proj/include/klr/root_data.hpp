#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klr {

// Weights are stored by their pairings with the simple coroots; root vectors
// by their multiplicities of simple roots. Words are sequences of vertex indices.
using Weight = std::vector<int>;
using RootVector = std::vector<int>;
using Word = std::vector<int>;

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<std::pair<int, int>> edges);

  static Quiver type_a(int rank);
  static Quiver type_d4();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;
  const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }

  // number of arrows i -> j
  int arrows(int i, int j) const { return arrows_[i][j]; }
  int cartan(int i, int j) const;
  bool finite_type() const;

  Weight simple_root(int j) const;
  Weight weight_of(const Weight& lambda, const RootVector& nu) const;
  int pairing(const RootVector& a, const RootVector& b) const;
  // lambda - mu as a combination of simple roots, when it is one
  std::optional<RootVector> root_difference(const Weight& lambda, const Weight& mu) const;

  Quiver subquiver(const std::vector<int>& keep) const;

  std::map<std::string, Weight> named_weights;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> arrows_;
};

RootVector root_content(const Word& w, int rank);
std::vector<Word> words_of(const RootVector& nu);
int total_height(const RootVector& nu);

// Bivariate polynomial in (u, v) with an optional deformation parameter h.
struct QPolynomial {
  std::map<std::array<int, 3>, long long> terms;  // (deg u, deg v, deg h) -> coeff

  bool is_zero() const { return terms.empty(); }
  bool has_h() const;
  long long eval(long long u, long long v, long long h = 0) const;
  std::string to_string() const;
};

QPolynomial qpoly(const Quiver& q, int i, int j, bool deformed = false);
// factor used by the polynomial representation on a crossing of an i strand
// (left) and a j strand (right): P_ij(u, v) P_ji(v, u) = Q_ij(u, v)
QPolynomial crossing_factor(const Quiver& q, int i, int j, bool deformed = false);

int dot_degree();
int crossing_degree(const Quiver& q, int left, int right);
int cap_degree(const Weight& lambda, int i);
int cup_degree(const Weight& lambda, int i);

// Z/2-valued bilinear form on the root lattice with
// beta(a, b) + beta(b, a) = <a, b> mod 2 and beta(a_i, a_i) = 0.
class BetaForm {
 public:
  enum class Kind { Order, Bipartite, Zero };

  static BetaForm from_order(const Quiver& q, const std::vector<int>& order);
  static BetaForm bipartite(const Quiver& q);
  static BetaForm bipartite(const Quiver& q, const std::vector<int>& parity);
  static BetaForm zero(const Quiver& q);

  int operator()(int i, int j) const { return table_[i][j]; }
  int operator()(const RootVector& a, const RootVector& b) const;
  Kind kind() const { return kind_; }
  std::string describe() const;
  void validate(const Quiver& q) const;

 private:
  Kind kind_ = Kind::Zero;
  std::vector<std::vector<int>> table_;
};

// mu^i - v_i, or mu^i + v_i with the alternative sign, where lambda - mu = sum v_j a_j
int xi_offset(const Quiver& q, const Weight& lambda, const Weight& mu, int i, bool alt = false);

std::string weight_to_string(const std::vector<int>& w);
std::vector<int> parse_csv_ints(const std::string& s);

}  // namespace klr
