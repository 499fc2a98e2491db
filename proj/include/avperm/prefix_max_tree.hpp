#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

namespace avperm {

// Fenwick tree over keys 1..size answering prefix maxima. Values only ever
// grow (raise), which is all the LIS-style sweeps need.
template <typename T>
class PrefixMaxTree {
 public:
  explicit PrefixMaxTree(int size = 0, T identity = T{})
      : tree_(static_cast<std::size_t>(size) + 1, identity), identity_(identity) {}

  int size() const noexcept { return static_cast<int>(tree_.size()) - 1; }

  void clear() { std::fill(tree_.begin(), tree_.end(), identity_); }

  // key in 1..size()
  void raise(int key, const T& value) {
    assert(key >= 1 && key <= size());
    for (auto i = static_cast<std::size_t>(key); i < tree_.size(); i += i & (~i + 1)) {
      if (tree_[i] < value) tree_[i] = value;
    }
  }

  // max over keys 1..key; identity for key <= 0.
  T prefix_max(int key) const {
    T best = identity_;
    for (auto i = static_cast<std::size_t>(std::clamp(key, 0, size())); i > 0;
         i -= i & (~i + 1)) {
      if (best < tree_[i]) best = tree_[i];
    }
    return best;
  }

 private:
  std::vector<T> tree_;
  T identity_;
};

}  // namespace avperm
