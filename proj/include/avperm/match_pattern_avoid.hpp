#pragma once

#include <optional>
#include <vector>

#include "avperm/av_class.hpp"
#include "avperm/permutation.hpp"
#include "avperm/stats.hpp"

namespace avperm {

// lm(i, j) for a (213,231)-avoiding pattern with factors F(m) ... F(1) and a
// text of length n.
//
// Consider every matching of the pattern suffix that starts at F(i) into
// text[j..n] with the leftmost element of F(i) on text[j]. Its extreme value
// is the maximum when F(i) is an ascent factor and the minimum when F(i) is a
// descent factor. lm(i, j) is the best achievable extreme: the smallest
// maximum (ascent) or the largest minimum (descent). Absent when no such
// matching exists.
class LMTable {
 public:
  LMTable(FactorDecomposition factors, int text_size);

  int factor_count() const noexcept { return factors_.count(); }
  int text_size() const noexcept { return n_; }
  const FactorDecomposition& factors() const noexcept { return factors_; }

  std::optional<int> at(int label, Position j) const {
    const int v = values_[index(label, j)];
    return v == kNone ? std::nullopt : std::optional<int>(v);
  }

  // The last text position used by F(label) in a matching that realizes
  // at(label, j). Meaningful only when at(label, j) has a value.
  Position split(int label, Position j) const { return splits_[index(label, j)]; }

  void set(int label, Position j, int value, Position split) {
    values_[index(label, j)] = value;
    splits_[index(label, j)] = split;
  }

 private:
  static constexpr int kNone = 0;

  std::size_t index(int label, Position j) const {
    assert(label >= 1 && label <= factor_count() && j >= 1 && j <= n_);
    return static_cast<std::size_t>(label - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  FactorDecomposition factors_;
  int n_;
  std::vector<int> values_;
  std::vector<Position> splits_;
};

// Fills every cell. Positions are processed right to left; for each start j
// one increasing and one decreasing BoundedRunIndex anchored at j sweep the
// split position j' = j..n once, serving the base row and every factor row,
// so the total work is O(n^2 (log n + m)).
//
// Steps: one per (j, j') pair per factor row. Throws InvalidClass if the
// pattern does not avoid 213 and 231.
LMTable build_lm_table(const Permutation& pattern, const Permutation& text,
                       SolveStats* stats = nullptr);

// Decides pattern <= text for an avoiding pattern and an arbitrary text. On
// success the embedding is rebuilt from the stored splits.
std::optional<Embedding> matches_pattern_avoiding(const Permutation& pattern,
                                                  const Permutation& text,
                                                  SolveStats* stats = nullptr);

// Rebuilds a matching of the pattern suffix starting at F(label) with its
// first element on text[j]. Requires table.at(label, j).
Embedding reconstruct_suffix(const LMTable& table, const Permutation& text, int label,
                             Position j);

}  // namespace avperm
