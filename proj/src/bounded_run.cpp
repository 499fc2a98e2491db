#include "avperm/bounded_run.hpp"

#include <string>

namespace avperm {

BoundedRunIndex::BoundedRunIndex(const Permutation& text, Direction direction)
    : values_(text.values()), n_(text.size()), direction_(direction), best_(text.size(), 0) {}

BoundedRunIndex::BoundedRunIndex(const Permutation& text, Direction direction, Position start)
    : BoundedRunIndex(text, direction) {
  reset(start);
}

void BoundedRunIndex::reset(Position start) {
  assert(start >= 1 && start <= n_);
  best_.clear();
  start_ = start;
  last_ = start;
  best_.raise(key(values_[static_cast<std::size_t>(start - 1)]), 1);
}

void BoundedRunIndex::extend() {
  assert(start_ >= 1 && last_ < n_);
  ++last_;
  const int k = key(values_[static_cast<std::size_t>(last_ - 1)]);
  // Only elements beyond the anchor in run order can join a run that starts
  // at the anchor; everything keyed below it is already a valid predecessor.
  if (k > key(values_[static_cast<std::size_t>(start_ - 1)])) {
    best_.raise(k, 1 + best_.prefix_max(k - 1));
  }
}

int BoundedRunIndex::query(int bound) const {
  return direction_ == Direction::Increasing ? best_.prefix_max(bound - 1)
                                             : best_.prefix_max(n_ - bound);
}

namespace {

int bounded_run(const Permutation& text, Position j, Position j2, int bound, Direction dir) {
  if (j < 1 || j > j2 || j2 > text.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "bounded run window [" + std::to_string(j) + ", " +
                                                std::to_string(j2) + "] invalid for n = " +
                                                std::to_string(text.size()));
  }
  BoundedRunIndex index(text, dir, j);
  index.extend_through(j2);
  return index.query(bound);
}

}  // namespace

int bounded_lis(const Permutation& text, Position j, Position j2, int bound) {
  return bounded_run(text, j, j2, bound, Direction::Increasing);
}

int bounded_lds(const Permutation& text, Position j, Position j2, int bound) {
  return bounded_run(text, j, j2, bound, Direction::Decreasing);
}

}  // namespace avperm
