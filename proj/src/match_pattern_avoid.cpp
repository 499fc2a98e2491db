#include "avperm/match_pattern_avoid.hpp"

#include <limits>
#include <utility>

#include "avperm/bounded_run.hpp"
#include "avperm/prefix_max_tree.hpp"

namespace avperm {

LMTable::LMTable(FactorDecomposition factors, int text_size)
    : factors_(std::move(factors)),
      n_(text_size),
      values_(static_cast<std::size_t>(factors_.count()) * static_cast<std::size_t>(text_size),
              kNone),
      splits_(values_.size(), 0) {}

LMTable build_lm_table(const Permutation& pattern, const Permutation& text, SolveStats* stats) {
  if (!is_av_213_231(pattern)) {
    throw Error(ErrorCode::InvalidClass,
                "pattern " + pattern.to_string() + " contains 213 or 231");
  }
  LMTable table(factor_decompose(pattern), text.size());
  const FactorDecomposition& factors = table.factors();
  const int m = factors.count();
  const int n = text.size();
  for (int label = 2; label <= m; ++label) {
    // Adjacent factors alternate, so each bound crosses an ascent/descent
    // boundary.
    assert(factors.factor(label).kind != factors.factor(label - 1).kind);
  }

  BoundedRunIndex increasing(text, Direction::Increasing);
  BoundedRunIndex decreasing(text, Direction::Decreasing);
  const Factor& first = factors.factor(1);

  struct Best {
    int value = 0;
    Position split = 0;
  };
  std::vector<Best> best(static_cast<std::size_t>(m) + 1);
  std::uint64_t steps = 0;

  for (Position j = n; j >= 1; --j) {
    increasing.reset(j);
    decreasing.reset(j);
    std::fill(best.begin(), best.end(), Best{});

    // Ascent rows keep the smallest candidate, descent rows the largest.
    auto offer = [&](int label, Kind kind, int candidate, Position split) {
      Best& b = best[static_cast<std::size_t>(label)];
      if (b.value == 0 || (kind == Kind::Ascent ? candidate < b.value : candidate > b.value)) {
        b = Best{candidate, split};
      }
    };

    for (Position split = j; split <= n; ++split) {
      if (split > j) {
        increasing.extend();
        decreasing.extend();
      }
      const int v = text.value(split);

      // F(1) alone: a run that may end on text[split] itself.
      if (first.kind == Kind::Ascent) {
        if (increasing.query(v + 1) >= first.size()) offer(1, Kind::Ascent, v, split);
      } else {
        if (decreasing.query(v - 1) >= first.size()) offer(1, Kind::Descent, v, split);
      }
      ++steps;

      if (split == n) continue;
      const int next = text.value(split + 1);
      for (int label = 2; label <= m; ++label) {
        ++steps;
        const auto rest = table.at(label - 1, split + 1);
        if (!rest) continue;
        const Factor& f = factors.factor(label);
        if (f.kind == Kind::Ascent) {
          if (increasing.query(*rest) >= f.size()) offer(label, Kind::Ascent, next, split);
        } else {
          if (decreasing.query(*rest) >= f.size()) offer(label, Kind::Descent, next, split);
        }
      }
    }

    for (int label = 1; label <= m; ++label) {
      const Best& b = best[static_cast<std::size_t>(label)];
      if (b.value != 0) table.set(label, j, b.value, b.split);
    }
  }
  if (stats) stats->steps += steps;
  return table;
}

namespace {

// A monotone run of exactly `length` elements in text[start..end] that begins
// at text[start] and stays strictly within the bound. The caller guarantees
// one exists.
std::vector<Position> monotone_run(const Permutation& text, Position start, Position end,
                                   int bound, Kind kind, int length) {
  const int n = text.size();
  const bool up = kind == Kind::Ascent;
  auto key = [&](int value) { return up ? value : n + 1 - value; };
  const int key_bound = up ? bound : n + 1 - bound;  // keys must stay below this

  // (run length, position) of the best run ending at each key.
  PrefixMaxTree<std::pair<int, Position>> tree(n, {0, 0});
  std::vector<Position> pred(static_cast<std::size_t>(n) + 1, 0);
  const int anchor = key(text.value(start));
  assert(anchor < key_bound);
  tree.raise(anchor, {1, start});
  if (length == 1) return {start};

  for (Position p = start + 1; p <= end; ++p) {
    const int k = key(text.value(p));
    if (k <= anchor || k >= key_bound) continue;
    const auto [len, from] = tree.prefix_max(k - 1);
    pred[static_cast<std::size_t>(p)] = from;
    if (len + 1 == length) {
      std::vector<Position> run(static_cast<std::size_t>(length));
      Position at = p;
      for (int i = length - 1; i >= 0; --i) {
        run[static_cast<std::size_t>(i)] = at;
        at = pred[static_cast<std::size_t>(at)];
      }
      return run;
    }
    tree.raise(k, {len + 1, p});
  }
  throw Error(ErrorCode::InvalidArgument, "no monotone run of the requested length");
}

}  // namespace

Embedding reconstruct_suffix(const LMTable& table, const Permutation& text, int label,
                             Position j) {
  Embedding out;
  while (true) {
    assert(table.at(label, j));
    const Factor& f = table.factors().factor(label);
    const Position split = table.split(label, j);
    int bound = 0;
    if (label == 1) {
      bound = f.kind == Kind::Ascent ? text.value(split) + 1 : text.value(split) - 1;
    } else {
      bound = *table.at(label - 1, split + 1);
    }
    for (Position p : monotone_run(text, j, split, bound, f.kind, f.size())) {
      out.positions.push_back(p);
    }
    if (label == 1) break;
    --label;
    j = split + 1;
  }
  return out;
}

std::optional<Embedding> matches_pattern_avoiding(const Permutation& pattern,
                                                  const Permutation& text, SolveStats* stats) {
  const LMTable table = build_lm_table(pattern, text, stats);
  const int m = table.factor_count();
  for (Position j = 1; j <= text.size(); ++j) {
    if (table.at(m, j)) return reconstruct_suffix(table, text, m, j);
  }
  return std::nullopt;
}

}  // namespace avperm
