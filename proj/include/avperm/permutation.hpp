#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avperm/error.hpp"

namespace avperm {

// Positions into a permutation are 1-based throughout the public API, to
// match the usual notation pi[1..n]. Values are 1..n.
using Position = int;

// A permutation of 1..n, n >= 1. Always valid once constructed.
class Permutation {
 public:
  // Throws Error{EmptyInput | Duplicate | ValueOutOfRange}.
  explicit Permutation(std::vector<int> values);

  // Text format: decimal integers separated by single spaces, e.g.
  // "3 9 1 8 6 7 4 5 2". A trailing newline is tolerated.
  static Permutation parse(std::string_view text);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }

  int value(Position pos) const noexcept {
    assert(pos >= 1 && pos <= size());
    return values_[static_cast<std::size_t>(pos - 1)];
  }

  // 0-based view of the values.
  std::span<const int> values() const noexcept { return values_; }

  // Positions indexed by value: position_of(v) is the 1-based position of v.
  std::vector<Position> inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Uniform over S_n; deterministic in seed.
Permutation random_permutation(int n, std::uint64_t seed);

inline Permutation make_permutation(std::span<const int> raw) {
  return Permutation(std::vector<int>(raw.begin(), raw.end()));
}

// Strict integer-list parser shared by the permutation and bivincular
// grammars: tokens separated by exactly one space.
std::vector<int> parse_integer_list(std::string_view text, char separator = ' ');

// Relabels a sequence of distinct integers to the order-isomorphic
// permutation of 1..n ("flattening"). Throws on duplicates or empty input.
Permutation standardize(std::span<const int> distinct_values);

// True iff a and b have the same length and the same relative order.
bool is_order_isomorphic(std::span<const int> a, std::span<const int> b);

// Strictly increasing 1-based positions into a text.
struct Embedding {
  std::vector<Position> positions;

  int size() const noexcept { return static_cast<int>(positions.size()); }

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// "(1,2,4,5)"
std::string to_string(const Embedding& embedding);

std::vector<int> values_at(const Permutation& text, const Embedding& embedding);

// Positions strictly increasing and in range, and the selected values
// order-isomorphic to the pattern.
bool is_valid_embedding(const Permutation& pattern, const Permutation& text,
                        const Embedding& embedding);

}  // namespace avperm
