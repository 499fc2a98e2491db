#include "avperm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

namespace avperm::oracle {
namespace {

constexpr int kMaxBivincularText = 20;

void guard(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::SizeGuard, "oracle size guard exceeded: " + what);
}

std::vector<int> flatten(const std::vector<int>& values) {
  std::vector<int> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int rank = 1;
    for (int w : values) rank += w < values[i] ? 1 : 0;
    out[i] = rank;
  }
  return out;
}

// Visits every strictly increasing tuple of `k` positions from
// first..last in lexicographic order until visit returns true.
bool for_each_tuple(int k, Position first, Position last,
                    const std::function<bool(const std::vector<Position>&)>& visit) {
  std::vector<Position> tuple;
  std::function<bool(Position)> go = [&](Position from) {
    if (static_cast<int>(tuple.size()) == k) return visit(tuple);
    const int still_needed = k - static_cast<int>(tuple.size());
    for (Position p = from; p <= last - still_needed + 1; ++p) {
      tuple.push_back(p);
      if (go(p + 1)) return true;
      tuple.pop_back();
    }
    return false;
  };
  return go(first);
}

}  // namespace

bool avoids_213_231(std::span<const int> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        const bool p213 = v[j] < v[i] && v[i] < v[l];
        const bool p231 = v[l] < v[i] && v[i] < v[j];
        if (p213 || p231) return false;
      }
    }
  }
  return true;
}

std::optional<Embedding> brute_match(const Permutation& pattern, const Permutation& text) {
  const int k = pattern.size();
  const int n = text.size();
  guard(k <= kMaxPatternLength && n <= kMaxTextLength,
        "brute_match k=" + std::to_string(k) + " n=" + std::to_string(n));
  if (k > n) return std::nullopt;

  std::vector<Position> chosen;
  std::function<bool(Position)> go = [&](Position from) {
    const int t = static_cast<int>(chosen.size());
    if (t == k) return true;
    for (Position p = from; p <= n - (k - t) + 1; ++p) {
      bool consistent = true;
      for (int s = 0; s < t && consistent; ++s) {
        consistent = (pattern.value(s + 1) < pattern.value(t + 1)) ==
                     (text.value(chosen[static_cast<std::size_t>(s)]) < text.value(p));
      }
      if (!consistent) continue;
      chosen.push_back(p);
      if (go(p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!go(1)) return std::nullopt;
  return Embedding{chosen};
}

bool is_bivincular_embedding(const BivincularPattern& pattern, const Permutation& text,
                             const Embedding& e) {
  const Permutation& bottom = pattern.bottom;
  const int k = bottom.size();
  const int n = text.size();
  if (!is_valid_embedding(bottom, text, e)) return false;
  auto at = [&](int i) { return e.positions[static_cast<std::size_t>(i - 1)]; };
  // Text value matched to pattern value v.
  auto image = [&](int v) {
    for (int i = 1; i <= k; ++i) {
      if (bottom.value(i) == v) return text.value(at(i));
    }
    return 0;
  };
  for (int i : pattern.pos_adjacent) {
    if (at(i + 1) != at(i) + 1) return false;
  }
  for (int v : pattern.val_adjacent) {
    if (image(v + 1) != image(v) + 1) return false;
  }
  if (pattern.first_anchor && at(1) != 1) return false;
  if (pattern.last_anchor && at(k) != n) return false;
  if (pattern.min_anchor && image(1) != 1) return false;
  if (pattern.max_anchor && image(k) != n) return false;
  return true;
}

std::optional<Embedding> brute_match_bivincular(const BivincularPattern& pattern,
                                                const Permutation& text) {
  const int k = pattern.size();
  const int n = text.size();
  guard(k <= kMaxPatternLength && n <= kMaxBivincularText,
        "brute_match_bivincular k=" + std::to_string(k) + " n=" + std::to_string(n));
  std::optional<Embedding> found;
  for_each_tuple(k, 1, n, [&](const std::vector<Position>& tuple) {
    Embedding e{tuple};
    if (!is_bivincular_embedding(pattern, text, e)) return false;
    found = std::move(e);
    return true;
  });
  return found;
}

int brute_longest_av(const Permutation& text) {
  const int n = text.size();
  guard(n <= kMaxLongestText, "brute_longest_av n=" + std::to_string(n));
  int best = 0;
  std::vector<int> picked;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    picked.clear();
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) picked.push_back(text.value(i + 1));
    }
    if (avoids_213_231(picked)) best = size;
  }
  return best;
}

std::set<std::vector<int>> contained_av_patterns(const Permutation& text) {
  const int n = text.size();
  guard(n <= kMaxLongestText, "contained_av_patterns n=" + std::to_string(n));
  std::set<std::vector<int>> out;
  std::vector<int> picked;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    picked.clear();
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) picked.push_back(text.value(i + 1));
    }
    if (avoids_213_231(picked)) out.insert(flatten(picked));
  }
  return out;
}

int brute_lcs_av(const Permutation& first, const Permutation& second) {
  guard(first.size() <= kMaxLcsText && second.size() <= kMaxLcsText,
        "brute_lcs_av n1=" + std::to_string(first.size()) +
            " n2=" + std::to_string(second.size()));
  const auto a = contained_av_patterns(first);
  const auto b = contained_av_patterns(second);
  int best = 0;
  for (const auto& p : a) {
    if (static_cast<int>(p.size()) > best && b.count(p) != 0) best = static_cast<int>(p.size());
  }
  return best;
}

std::optional<int> brute_lm(const Permutation& pattern, const Permutation& text, int label,
                            Position j) {
  const int k = pattern.size();
  const int n = text.size();
  guard(k <= kMaxPatternLength && n <= kMaxLongestText,
        "brute_lm k=" + std::to_string(k) + " n=" + std::to_string(n));
  if (j < 1 || j > n) throw Error(ErrorCode::IndexOutOfRange, "brute_lm start out of range");

  // Factor starts, left to right: a new factor begins wherever the
  // ascent/descent kind changes between consecutive non-final elements.
  std::vector<Position> starts{1};
  for (Position i = 2; i < k; ++i) {
    const bool prev_up = pattern.value(i - 1) < pattern.value(i);
    const bool up = pattern.value(i) < pattern.value(i + 1);
    if (up != prev_up) starts.push_back(i);
  }
  const int m = static_cast<int>(starts.size());
  if (label < 1 || label > m) throw Error(ErrorCode::IndexOutOfRange, "brute_lm bad label");
  const Position s = starts[static_cast<std::size_t>(m - label)];
  const bool ascent = k == 1 || pattern.value(s) < pattern.value(s + 1);
  const int len = k - s + 1;

  std::optional<int> best;
  for_each_tuple(len - 1, j + 1, n, [&](const std::vector<Position>& rest) {
    std::vector<int> image{text.value(j)};
    std::vector<int> wanted{pattern.value(s)};
    for (int t = 0; t < len - 1; ++t) {
      image.push_back(text.value(rest[static_cast<std::size_t>(t)]));
      wanted.push_back(pattern.value(s + t + 1));
    }
    if (!is_order_isomorphic(wanted, image)) return false;
    const int extreme = ascent ? *std::max_element(image.begin(), image.end())
                               : *std::min_element(image.begin(), image.end());
    if (!best || (ascent ? extreme < *best : extreme > *best)) best = extreme;
    return false;
  });
  return best;
}

}  // namespace avperm::oracle
