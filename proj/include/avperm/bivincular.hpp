#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "avperm/bivincular_pattern.hpp"
#include "avperm/permutation.hpp"
#include "avperm/state_memo.hpp"
#include "avperm/stats.hpp"

namespace avperm {

// Decides whether a text matches a (213,231)-avoiding bivincular pattern.
//
// pm(lb, ub, i, j) holds iff the pattern suffix bottom[i..k] matches in
// text[j..n] with bottom[i] on text[j], every matched value inside [lb, ub],
// and every constraint of the suffix honoured. Each non-final pattern element
// is the minimum (ascent) or maximum (descent) of its suffix, so matching an
// ascent raises lb to text[j] + 1 and matching a descent lowers ub to
// text[j] - 1; the window then carries everything later elements need to
// know about earlier ones. In particular lb - 1 is the match of the latest
// ascent element and ub + 1 that of the latest descent element, which is how
// value adjacency with an earlier partner becomes the gate text[j] == lb (or
// == ub).
//
// The text may be any permutation. The matcher object owns its memo and may
// be reused across calls; it is not thread-safe.
class BivincularMatcher {
 public:
  // Steps: one per memo state evaluated.
  std::optional<Embedding> match(const BivincularPattern& pattern, const Permutation& text,
                                 SolveStats* stats = nullptr);

 private:
  struct Slot {
    bool ascent = false;      // kind, for positions before the last
    bool next_adjacent = false;
    bool gate_lb = false;     // value adjacency with an earlier, smaller partner
    bool gate_ub = false;     // value adjacency with an earlier, larger partner
    bool must_be_min = false;
    bool must_be_max = false;
  };

  bool pm(int lb, int ub, int i, Position j);
  std::size_t key(int lb, int ub, int i, Position j) const;

  std::vector<Slot> slots_;  // 1-based pattern positions
  std::span<const int> text_;
  int k_ = 0;
  int n_ = 0;
  bool last_anchor_ = false;
  std::uint64_t steps_ = 0;
  StateMemo<std::uint8_t> memo_;
};

std::optional<Embedding> matches_bivincular(const BivincularPattern& pattern,
                                            const Permutation& text,
                                            SolveStats* stats = nullptr);

}  // namespace avperm
