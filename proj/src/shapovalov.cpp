#include "klr/shapovalov.hpp"

namespace klr {

ShapovalovOracle::ShapovalovOracle(const Quiver& q, Weight lambda) : quiver_(q), lambda_(std::move(lambda)) {
  if (static_cast<int>(lambda_.size()) != q.size()) throw InvalidInput("weight has wrong length");
}

Weight ShapovalovOracle::weight_after(const Word& w) const {
  Weight mu = lambda_;
  for (int a : w)
    for (int k = 0; k < quiver_.size(); ++k) mu[k] -= quiver_.cartan(k, a);
  return mu;
}

Laurent ShapovalovOracle::graded_dim(const Word& i, const Word& j) {
  if (i.size() != j.size()) return {};
  if (i.empty()) return Laurent::monomial(0);
  auto key = std::make_pair(i, j);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (root_content(i, quiver_.size()) != root_content(j, quiver_.size()))
    throw InvalidInput("words of different content");

  // move e_a (a the last letter of i) through f_j: each f_a at position m
  // contributes [weight before it]_q times the pairing with that letter removed
  const int a = i.back();
  Word ip(i.begin(), i.end() - 1);
  Laurent total;
  for (size_t m = 0; m < j.size(); ++m) {
    if (j[m] != a) continue;
    Word prefix(j.begin(), j.begin() + m);
    Word jm = j;
    jm.erase(jm.begin() + m);
    total += Laurent::quantum_integer(weight_after(prefix)[a]) * graded_dim(ip, jm);
  }
  // normalization so that exponents are degrees
  int shift = weight_after(j)[a] + 2 - 1;
  Laurent out = total.shift(shift);
  memo_.emplace(key, out);
  return out;
}

Laurent ShapovalovOracle::hilbert_series(const RootVector& nu) {
  auto ws = words_of(nu);
  Laurent total;
  for (const auto& i : ws)
    for (const auto& j : ws) total += graded_dim(i, j);
  return total;
}

}  // namespace klr
