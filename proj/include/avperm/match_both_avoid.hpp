#pragma once

#include <optional>
#include <vector>

#include "avperm/av_class.hpp"
#include "avperm/permutation.hpp"
#include "avperm/stats.hpp"

namespace avperm {

// Single-pass matcher for a (213,231)-avoiding pattern against a text that
// also avoids. When both avoid, the pattern matches iff its ascent/descent
// word is a subsequence of the text's word, so a greedy leftmost word match
// decides it. The text's letters are derived on the fly, and the text's own
// class membership is checked on the fly: every element must lie strictly
// between the largest ascent value and the smallest descent value seen
// before it.
//
// Feed text values with push(). O(1) work per element.
class OnlineMatcher {
 public:
  // Throws InvalidClass if the pattern does not avoid 213 and 231.
  explicit OnlineMatcher(const Permutation& pattern);

  void push(int value);

  // The first embedding found; positions never change once set.
  const std::optional<Embedding>& match() const noexcept { return match_; }

  // False as soon as the text seen so far cannot extend to an avoiding
  // permutation.
  bool text_avoids() const noexcept { return text_avoids_; }

  int consumed() const noexcept { return consumed_; }

 private:
  AscDescWord word_;
  std::vector<Position> matched_;  // text positions of matched letters
  std::optional<Embedding> match_;
  int consumed_ = 0;
  int previous_ = 0;
  int ascent_floor_ = 0;   // largest ascent value so far
  int descent_ceiling_;    // smallest descent value so far
  bool text_avoids_ = true;
};

// Steps: one per text element consumed. Throws InvalidClass if either input
// does not avoid 213 and 231.
std::optional<Embedding> matches_both_avoiding(const Permutation& pattern,
                                               const Permutation& text,
                                               SolveStats* stats = nullptr);

}  // namespace avperm
