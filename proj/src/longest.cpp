#include "avperm/longest.hpp"

#include <algorithm>
#include <utility>

#include "avperm/prefix_max_tree.hpp"

namespace avperm {

PivotTables pivot_tables(const Permutation& text) {
  const int n = text.size();
  const auto size = static_cast<std::size_t>(n) + 1;
  PivotTables t{std::vector<int>(size, 0), std::vector<int>(size, 0),
                std::vector<Position>(size, 0), std::vector<Position>(size, 0)};
  // (run length, position) keyed by value, and by n + 1 - value for runs
  // going down.
  PrefixMaxTree<std::pair<int, Position>> up(n, {0, 0});
  PrefixMaxTree<std::pair<int, Position>> down(n, {0, 0});
  for (Position f = 1; f <= n; ++f) {
    const int v = text.value(f);
    const auto [inc_len, inc_from] = up.prefix_max(v - 1);
    const auto [dec_len, dec_from] = down.prefix_max(n - v);
    const auto idx = static_cast<std::size_t>(f);
    t.lis_end[idx] = inc_len + 1;
    t.lis_pred[idx] = inc_from;
    t.lds_end[idx] = dec_len + 1;
    t.lds_pred[idx] = dec_from;
    up.raise(v, {inc_len + 1, f});
    down.raise(n + 1 - v, {dec_len + 1, f});
  }
  return t;
}

Embedding longest_av_subsequence(const Permutation& text, SolveStats* stats) {
  const PivotTables t = pivot_tables(text);
  const int n = text.size();
  Position pivot = 1;
  for (Position f = 2; f <= n; ++f) {
    const auto i = static_cast<std::size_t>(f);
    const auto p = static_cast<std::size_t>(pivot);
    if (t.lis_end[i] + t.lds_end[i] > t.lis_end[p] + t.lds_end[p]) pivot = f;
  }
  Embedding out;
  for (Position at = pivot; at != 0; at = t.lis_pred[static_cast<std::size_t>(at)]) {
    out.positions.push_back(at);
  }
  for (Position at = t.lds_pred[static_cast<std::size_t>(pivot)]; at != 0;
       at = t.lds_pred[static_cast<std::size_t>(at)]) {
    out.positions.push_back(at);
  }
  std::sort(out.positions.begin(), out.positions.end());
  if (stats) stats->steps += static_cast<std::uint64_t>(n);
  return out;
}

std::size_t LcsSolver::key(int lb1, int ub1, int lb2, int ub2, Position i1, Position i2) const {
  // lb in 1..n+1, ub in 0..n, i in 1..n
  const auto s1 = static_cast<std::size_t>(n1_ + 1);
  const auto s2 = static_cast<std::size_t>(n2_ + 1);
  std::size_t k = static_cast<std::size_t>(lb1 - 1);
  k = k * s1 + static_cast<std::size_t>(ub1);
  k = k * s2 + static_cast<std::size_t>(lb2 - 1);
  k = k * s2 + static_cast<std::size_t>(ub2);
  k = k * static_cast<std::size_t>(n1_) + static_cast<std::size_t>(i1 - 1);
  k = k * static_cast<std::size_t>(n2_) + static_cast<std::size_t>(i2 - 1);
  return k;
}

int LcsSolver::best(int lb1, int ub1, int lb2, int ub2, Position i1, Position i2) {
  if (i1 > n1_ || i2 > n2_ || lb1 > ub1 || lb2 > ub2) return 0;
  const std::size_t state = key(lb1, ub1, lb2, ub2, i1, i2);
  if (const auto known = memo_.find(state)) return *known;
  ++steps_;

  int result = std::max(best(lb1, ub1, lb2, ub2, i1 + 1, i2),
                        best(lb1, ub1, lb2, ub2, i1, i2 + 1));
  const int x = a_[static_cast<std::size_t>(i1 - 1)];
  const int y = b_[static_cast<std::size_t>(i2 - 1)];
  if (lb1 <= x && x <= ub1 && lb2 <= y && y <= ub2) {
    result = std::max(result, 1 + best(x + 1, ub1, y + 1, ub2, i1 + 1, i2 + 1));
    result = std::max(result, 1 + best(lb1, x - 1, lb2, y - 1, i1 + 1, i2 + 1));
  }
  memo_.store(state, static_cast<std::int16_t>(result));
  return result;
}

LcsResult LcsSolver::solve(const Permutation& first, const Permutation& second,
                           SolveStats* stats) {
  a_ = first.values();
  b_ = second.values();
  n1_ = first.size();
  n2_ = second.size();
  steps_ = 0;
  const auto s1 = static_cast<std::size_t>(n1_ + 1);
  const auto s2 = static_cast<std::size_t>(n2_ + 1);
  memo_.reset(s1 * s1 * s2 * s2 * static_cast<std::size_t>(n1_) * static_cast<std::size_t>(n2_));

  int lb1 = 1, ub1 = n1_, lb2 = 1, ub2 = n2_;
  const int length = best(lb1, ub1, lb2, ub2, 1, 1);

  // Walk the optimal choices, preferring to match, and an ascent match first.
  Embedding e1, e2;
  Position i1 = 1, i2 = 1;
  int remaining = length;
  while (remaining > 0) {
    const int x = a_[static_cast<std::size_t>(i1 - 1)];
    const int y = b_[static_cast<std::size_t>(i2 - 1)];
    const bool fits = lb1 <= x && x <= ub1 && lb2 <= y && y <= ub2;
    if (fits && 1 + best(x + 1, ub1, y + 1, ub2, i1 + 1, i2 + 1) == remaining) {
      lb1 = x + 1;
      lb2 = y + 1;
    } else if (fits && 1 + best(lb1, x - 1, lb2, y - 1, i1 + 1, i2 + 1) == remaining) {
      ub1 = x - 1;
      ub2 = y - 1;
    } else if (best(lb1, ub1, lb2, ub2, i1 + 1, i2) == remaining) {
      ++i1;
      continue;
    } else {
      ++i2;
      continue;
    }
    e1.positions.push_back(i1++);
    e2.positions.push_back(i2++);
    --remaining;
  }
  if (stats) stats->steps += steps_;

  const std::vector<int> matched = values_at(first, e1);
  return LcsResult{length, standardize(matched), std::move(e1), std::move(e2)};
}

LcsResult lcs_av(const Permutation& first, const Permutation& second, SolveStats* stats) {
  LcsSolver solver;
  return solver.solve(first, second, stats);
}

}  // namespace avperm
