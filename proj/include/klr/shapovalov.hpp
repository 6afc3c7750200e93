#pragma once

#include <map>
#include <utility>

#include "klr/laurent.hpp"
#include "klr/root_data.hpp"

namespace klr {

// Graded dimensions of e(i) R^lambda e(j) from the q-Shapovalov pairing
// <f_i v, f_j v> on the highest weight vector of V(lambda). The exponent of q
// is the algebra degree. Independent of the KLR engine.
class ShapovalovOracle {
 public:
  ShapovalovOracle(const Quiver& q, Weight lambda);

  Laurent graded_dim(const Word& i, const Word& j);
  // sum over all pairs of words of content nu
  Laurent hilbert_series(const RootVector& nu);
  // weight of lambda minus the letters of w
  Weight weight_after(const Word& w) const;

 private:
  const Quiver& quiver_;
  Weight lambda_;
  std::map<std::pair<Word, Word>, Laurent> memo_;
};

}  // namespace klr
