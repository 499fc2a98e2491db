#pragma once

#include "avperm/permutation.hpp"
#include "avperm/prefix_max_tree.hpp"

namespace avperm {

enum class Direction { Increasing, Decreasing };

// Longest monotone run anchored at a fixed text position, queried under a
// value bound while the window grows to the right.
//
// After extending through position last(), query(bound) is the length of the
// longest increasing (Decreasing: decreasing) subsequence of
// text[start..last()] that begins at text[start] and whose elements are all
// strictly below (Decreasing: strictly above) bound. It is 0 when text[start]
// itself violates the bound.
//
// Each extend() and query() is O(log n). reset() reuses the storage for a new
// anchor in O(n).
class BoundedRunIndex {
 public:
  BoundedRunIndex(const Permutation& text, Direction direction);
  BoundedRunIndex(const Permutation& text, Direction direction, Position start);

  void reset(Position start);

  // Incorporates text[last() + 1].
  void extend();

  void extend_through(Position pos) {
    while (last_ < pos) extend();
  }

  int query(int bound) const;

  Position start() const noexcept { return start_; }
  Position last() const noexcept { return last_; }

 private:
  // Increasing runs key on the value; decreasing runs on n + 1 - value so that
  // both become prefix queries.
  int key(int value) const noexcept {
    return direction_ == Direction::Increasing ? value : n_ + 1 - value;
  }

  std::span<const int> values_;
  int n_;
  Direction direction_;
  Position start_ = 0;
  Position last_ = 0;
  PrefixMaxTree<int> best_;  // best run length ending at each key
};

// Stand-alone bounded queries over text[j..j2]. Throw IndexOutOfRange unless
// 1 <= j <= j2 <= n.
int bounded_lis(const Permutation& text, Position j, Position j2, int bound);
int bounded_lds(const Permutation& text, Position j, Position j2, int bound);

}  // namespace avperm
