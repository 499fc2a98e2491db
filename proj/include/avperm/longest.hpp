#pragma once

#include <cstdint>
#include <vector>

#include "avperm/permutation.hpp"
#include "avperm/state_memo.hpp"
#include "avperm/stats.hpp"

namespace avperm {

// Per-position longest monotone subsequences ending exactly there, with
// predecessor links for witness recovery. Index 0 is unused; positions are
// 1-based.
struct PivotTables {
  std::vector<int> lis_end;
  std::vector<int> lds_end;
  std::vector<Position> lis_pred;  // 0 when the run has length 1
  std::vector<Position> lds_pred;
};

// O(n log n) with a prefix-maximum tree over values.
PivotTables pivot_tables(const Permutation& text);

// A longest subsequence avoiding 213 and 231. Its length is
// max_f lis_end[f] + lds_end[f] - 1: the ascent elements of such a
// subsequence ending at f form an increasing run into f, the descent elements
// a decreasing run into f, and any such pair of runs unites into an avoiding
// subsequence. Ties go to the smallest f.
//
// Steps: one per text element.
Embedding longest_av_subsequence(const Permutation& text, SolveStats* stats = nullptr);

struct LcsResult {
  int length = 0;
  Permutation pattern;  // the common avoiding pattern, flattened to 1..length
  Embedding in_first;
  Embedding in_second;
};

// Longest common (213,231)-avoiding subsequence of two permutations.
//
// best(lb1, ub1, lb2, ub2, i1, i2) is the longest avoiding pattern matching
// in first[i1..] with all values in [lb1, ub1] and in second[i2..] with all
// values in [lb2, ub2]. Either text element may be skipped, or the pair
// (first[i1], second[i2]) may be matched as an ascent element (both lower
// bounds rise past it) or as a descent element (both upper bounds drop below
// it); both indices then advance. The top call uses the full windows
// [1, n1] and [1, n2].
//
// The solver owns its memo and may be reused across calls; it is not
// thread-safe. Steps: one per memo state evaluated.
class LcsSolver {
 public:
  LcsResult solve(const Permutation& first, const Permutation& second,
                  SolveStats* stats = nullptr);

 private:
  int best(int lb1, int ub1, int lb2, int ub2, Position i1, Position i2);
  std::size_t key(int lb1, int ub1, int lb2, int ub2, Position i1, Position i2) const;

  std::span<const int> a_;
  std::span<const int> b_;
  int n1_ = 0;
  int n2_ = 0;
  std::uint64_t steps_ = 0;
  StateMemo<std::int16_t> memo_;
};

LcsResult lcs_av(const Permutation& first, const Permutation& second,
                 SolveStats* stats = nullptr);

}  // namespace avperm
