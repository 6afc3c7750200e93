#include "klr/perm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace klr {

namespace {

uint32_t encode(const Perm& p, int n) {
  uint32_t code = 0;
  for (int i = 0; i < n; ++i) code = code * 8 + p[i];
  return code;
}

Perm apply_simple(int k, const Perm& p, int n) {
  Perm r = p;
  for (int i = 0; i < n; ++i) {
    if (r[i] == k) r[i] = static_cast<uint8_t>(k + 1);
    else if (r[i] == k + 1) r[i] = static_cast<uint8_t>(k);
  }
  return r;
}

int inversions(const Perm& p, int n) {
  int c = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p[a] > p[b]) ++c;
  return c;
}

}  // namespace

void apply_move(Letters& w, const WordMove& m) {
  if (m.braid) {
    std::swap(w[m.pos], w[m.pos + 1]);
    w[m.pos + 2] = w[m.pos];
  } else {
    std::swap(w[m.pos], w[m.pos + 1]);
  }
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 0 || n > kMaxStrands) throw InvalidInput("at most " + std::to_string(kMaxStrands) + " strands are supported");
  Perm p{};
  for (int i = 0; i < kMaxStrands; ++i) p[i] = static_cast<uint8_t>(i);
  std::vector<Perm> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
  std::stable_sort(all.begin(), all.end(), [n](const Perm& a, const Perm& b) {
    return inversions(a, n) < inversions(b, n);
  });
  perms_ = all;
  for (int i = 0; i < order(); ++i) lookup_[encode(perms_[i], n)] = i;
  left_.assign(order(), std::vector<int>(std::max(n - 1, 0)));
  for (int i = 0; i < order(); ++i)
    for (int k = 0; k + 1 < n; ++k) left_[i][k] = index(apply_simple(k, perms_[i], n));
  words_.assign(order(), {});
  for (int i = 1; i < order(); ++i) {
    for (int k = 0; k + 1 < n; ++k) {
      int j = left_[i][k];
      if (inversions(perms_[j], n) < inversions(perms_[i], n)) {
        words_[i].push_back(static_cast<uint8_t>(k));
        words_[i].insert(words_[i].end(), words_[j].begin(), words_[j].end());
        break;
      }
    }
  }
}

int SymmetricGroup::index(const Perm& p) const {
  auto it = lookup_.find(encode(p, n_));
  if (it == lookup_.end()) throw std::logic_error("not a permutation of the right size");
  return it->second;
}

int SymmetricGroup::from_letters(const Letters& w) const {
  int idx = identity();
  for (auto it = w.rbegin(); it != w.rend(); ++it) idx = left_mult(*it, idx);
  return idx;
}

bool SymmetricGroup::is_reduced(const Letters& w) const {
  return length(from_letters(w)) == static_cast<int>(w.size());
}

Word SymmetricGroup::act(int idx, const Word& bottom) const {
  Word top(bottom.size());
  for (int p = 0; p < n_; ++p) top[perms_[idx][p]] = bottom[p];
  return top;
}

const std::map<Letters, SymmetricGroup::TreeNode>& SymmetricGroup::tree(int idx) const {
  auto it = trees_.find(idx);
  if (it != trees_.end()) return it->second;
  std::map<Letters, TreeNode> t;
  const Letters& root = words_[idx];
  t.emplace(root, TreeNode{root, {0, false}});
  std::deque<Letters> queue{root};
  while (!queue.empty()) {
    Letters cur = queue.front();
    queue.pop_front();
    const int len = static_cast<int>(cur.size());
    for (int pos = 0; pos + 1 < len; ++pos) {
      for (bool braid : {false, true}) {
        if (!braid && std::abs(cur[pos] - cur[pos + 1]) < 2) continue;
        if (braid && (pos + 2 >= len || cur[pos] != cur[pos + 2] || std::abs(cur[pos] - cur[pos + 1]) != 1))
          continue;
        Letters next = cur;
        apply_move(next, {pos, braid});
        if (t.count(next)) continue;
        // the inverse move at the same position turns next back into cur
        t.emplace(next, TreeNode{cur, {pos, braid}});
        queue.push_back(next);
      }
    }
  }
  return trees_.emplace(idx, std::move(t)).first->second;
}

std::vector<WordMove> SymmetricGroup::path_to_canonical(const Letters& w) const {
  int idx = from_letters(w);
  const auto& t = tree(idx);
  std::vector<WordMove> moves;
  Letters cur = w;
  while (cur != words_[idx]) {
    auto it = t.find(cur);
    if (it == t.end()) throw std::logic_error("word is not a reduced expression");
    moves.push_back(it->second.move);
    cur = it->second.parent;
  }
  return moves;
}

std::vector<WordMove> SymmetricGroup::path_from_canonical(const Letters& w) const {
  auto moves = path_to_canonical(w);
  std::reverse(moves.begin(), moves.end());
  return moves;
}

}  // namespace klr
