#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "klr/root_data.hpp"

namespace klr {

constexpr int kMaxStrands = 6;

// A permutation as a map from bottom positions to top positions.
using Perm = std::array<uint8_t, kMaxStrands>;
using Letters = std::vector<uint8_t>;  // s_{l0} s_{l1} ... ; the last letter acts first

struct WordMove {
  int pos;
  bool braid;  // (a,b,a) -> (b,a,b) at pos, otherwise swap of two commuting letters
};

void apply_move(Letters& w, const WordMove& m);

class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  int n() const { return n_; }
  int order() const { return static_cast<int>(perms_.size()); }
  int identity() const { return 0; }
  const Perm& perm(int idx) const { return perms_[idx]; }
  int index(const Perm& p) const;
  int length(int idx) const { return static_cast<int>(words_[idx].size()); }
  // lexicographically smallest reduced word
  const Letters& word(int idx) const { return words_[idx]; }
  int left_mult(int k, int idx) const { return left_[idx][k]; }
  bool left_descent(int k, int idx) const { return length(left_[idx][k]) < length(idx); }
  int from_letters(const Letters& w) const;
  bool is_reduced(const Letters& w) const;
  Word act(int idx, const Word& bottom) const;

  // moves turning a reduced word into the canonical word of the same permutation
  std::vector<WordMove> path_to_canonical(const Letters& w) const;
  // moves turning the canonical word of idx into the given reduced word of idx
  std::vector<WordMove> path_from_canonical(const Letters& w) const;

 private:
  struct TreeNode {
    Letters parent;
    WordMove move;  // applied to this node's word, gives the parent
  };
  const std::map<Letters, TreeNode>& tree(int idx) const;

  int n_;
  std::vector<Perm> perms_;
  std::vector<Letters> words_;
  std::vector<std::vector<int>> left_;
  std::unordered_map<uint32_t, int> lookup_;
  mutable std::unordered_map<int, std::map<Letters, TreeNode>> trees_;
};

}  // namespace klr
