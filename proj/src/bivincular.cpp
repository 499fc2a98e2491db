#include "avperm/bivincular.hpp"

namespace avperm {

std::size_t BivincularMatcher::key(int lb, int ub, int i, Position j) const {
  // lb in 1..n+1, ub in 0..n
  const auto n = static_cast<std::size_t>(n_);
  return ((static_cast<std::size_t>(lb - 1) * (n + 1) + static_cast<std::size_t>(ub)) *
              static_cast<std::size_t>(k_) +
          static_cast<std::size_t>(i - 1)) *
             n +
         static_cast<std::size_t>(j - 1);
}

bool BivincularMatcher::pm(int lb, int ub, int i, Position j) {
  const int v = text_[static_cast<std::size_t>(j - 1)];
  if (v < lb || v > ub) return false;
  const Slot& slot = slots_[static_cast<std::size_t>(i)];
  if (slot.gate_lb && v != lb) return false;
  if (slot.gate_ub && v != ub) return false;
  if (slot.must_be_min && v != 1) return false;
  if (slot.must_be_max && v != n_) return false;
  if (i == k_) return !last_anchor_ || j == n_;

  const std::size_t state = key(lb, ub, i, j);
  if (const auto known = memo_.find(state)) return *known != 0;
  ++steps_;

  const int next_lb = slot.ascent ? v + 1 : lb;
  const int next_ub = slot.ascent ? ub : v - 1;
  bool found = false;
  if (slot.next_adjacent) {
    found = j < n_ && pm(next_lb, next_ub, i + 1, j + 1);
  } else {
    for (Position l = j + 1; l <= n_ && !found; ++l) {
      found = pm(next_lb, next_ub, i + 1, l);
    }
  }
  memo_.store(state, found ? 1 : 0);
  return found;
}

std::optional<Embedding> BivincularMatcher::match(const BivincularPattern& pattern,
                                                  const Permutation& text, SolveStats* stats) {
  validate(pattern);
  const Permutation& bottom = pattern.bottom;
  k_ = bottom.size();
  n_ = text.size();
  text_ = text.values();
  last_anchor_ = pattern.last_anchor;
  steps_ = 0;

  const auto pos = bottom.inverse();
  slots_.assign(static_cast<std::size_t>(k_) + 1, Slot{});
  for (Position i = 1; i <= k_; ++i) {
    Slot& s = slots_[static_cast<std::size_t>(i)];
    const int value = bottom.value(i);
    s.ascent = i < k_ && value < bottom.value(i + 1);
    s.next_adjacent = pattern.pos_adjacent.count(i) != 0;
    s.gate_lb = value > 1 && pattern.val_adjacent.count(value - 1) != 0 &&
                pos[static_cast<std::size_t>(value - 1)] < i;
    s.gate_ub = value < k_ && pattern.val_adjacent.count(value) != 0 &&
                pos[static_cast<std::size_t>(value + 1)] < i;
    s.must_be_min = pattern.min_anchor && value == 1;
    s.must_be_max = pattern.max_anchor && value == k_;
  }

  std::optional<Embedding> result;
  if (k_ <= n_) {
    memo_.reset(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1) *
                static_cast<std::size_t>(k_) * static_cast<std::size_t>(n_));
    const Position last_start = pattern.first_anchor ? 1 : n_;
    for (Position j = 1; j <= last_start && !result; ++j) {
      if (!pm(1, n_, 1, j)) continue;
      // Replay the recursion, taking the first successful successor each time.
      Embedding e;
      int lb = 1, ub = n_;
      Position at = j;
      for (int i = 1;; ++i) {
        e.positions.push_back(at);
        if (i == k_) break;
        const Slot& slot = slots_[static_cast<std::size_t>(i)];
        const int v = text_[static_cast<std::size_t>(at - 1)];
        if (slot.ascent) lb = v + 1; else ub = v - 1;
        Position next = at + 1;
        if (!slot.next_adjacent) {
          while (!pm(lb, ub, i + 1, next)) ++next;
        }
        at = next;
      }
      result = std::move(e);
    }
  }
  if (stats) stats->steps += steps_;
  return result;
}

std::optional<Embedding> matches_bivincular(const BivincularPattern& pattern,
                                            const Permutation& text, SolveStats* stats) {
  BivincularMatcher matcher;
  return matcher.match(pattern, text, stats);
}

}  // namespace avperm
