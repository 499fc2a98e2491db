#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

namespace avperm {

// Memo table for top-down DPs over a dense integer key space. Small spaces
// use a flat array whose entries are invalidated by bumping an epoch, so a
// solver object can be reused across many calls without clearing memory.
// Spaces above dense_limit fall back to a hash map of the reachable states.
template <typename V>
class StateMemo {
 public:
  static constexpr std::size_t kDefaultDenseLimit = std::size_t{1} << 25;

  explicit StateMemo(std::size_t dense_limit = kDefaultDenseLimit) : dense_limit_(dense_limit) {}

  // Forgets every stored state and prepares for keys in [0, key_space).
  void reset(std::size_t key_space) {
    sparse_.clear();
    dense_mode_ = key_space <= dense_limit_;
    if (!dense_mode_) return;
    if (key_space > stamps_.size()) {
      stamps_.assign(key_space, 0);
      values_.resize(key_space);
      epoch_ = 0;
    }
    if (++epoch_ == 0) {  // wrapped: old stamps could alias
      std::fill(stamps_.begin(), stamps_.end(), 0);
      epoch_ = 1;
    }
  }

  std::optional<V> find(std::size_t key) const {
    if (dense_mode_) {
      if (stamps_[key] != epoch_) return std::nullopt;
      return values_[key];
    }
    const auto it = sparse_.find(key);
    if (it == sparse_.end()) return std::nullopt;
    return it->second;
  }

  void store(std::size_t key, V value) {
    if (dense_mode_) {
      stamps_[key] = epoch_;
      values_[key] = value;
    } else {
      sparse_[key] = value;
    }
  }

 private:
  std::size_t dense_limit_;
  bool dense_mode_ = true;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamps_;
  std::vector<V> values_;
  std::unordered_map<std::size_t, V> sparse_;
};

}  // namespace avperm
