#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string_view>
#include <vector>

#include "avperm/bivincular_pattern.hpp"
#include "avperm/permutation.hpp"

namespace avperm::test {

inline Permutation P(std::string_view text) { return Permutation::parse(text); }

// Every permutation of 1..n in lexicographic order.
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// All constraint combinations on a bottom row that survive validation.
inline std::vector<BivincularPattern> all_constraint_variants(const Permutation& bottom) {
  const int k = bottom.size();
  const int gaps = k - 1;
  std::vector<BivincularPattern> out;
  for (std::uint32_t pos = 0; pos < (1U << gaps); ++pos) {
    for (std::uint32_t val = 0; val < (1U << gaps); ++val) {
      for (std::uint32_t flags = 0; flags < 16; ++flags) {
        BivincularPattern p(bottom);
        for (int i = 1; i <= gaps; ++i) {
          if (pos >> (i - 1) & 1U) p.pos_adjacent.insert(i);
          if (val >> (i - 1) & 1U) p.val_adjacent.insert(i);
        }
        p.first_anchor = flags & 1U;
        p.last_anchor = flags & 2U;
        p.min_anchor = flags & 4U;
        p.max_anchor = flags & 8U;
        try {
          validate(p);
        } catch (const Error&) {
          continue;
        }
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace avperm::test
