#pragma once

#include <set>
#include <string>
#include <string_view>

#include "avperm/permutation.hpp"

namespace avperm {

// A (213,231)-avoiding bottom row with position and value constraints.
//
//   pos_adjacent  i in 1..k-1: matches of bottom[i], bottom[i+1] sit at
//                 consecutive text positions.
//   val_adjacent  v in 1..k-1: matches of pattern values v and v+1 are
//                 consecutive text values.
//   first_anchor  bottom[1] matches text position 1.
//   last_anchor   bottom[k] matches text position n.
//   min_anchor    pattern value 1 matches text value 1.
//   max_anchor    pattern value k matches text value n.
struct BivincularPattern {
  Permutation bottom;
  std::set<int> pos_adjacent;
  std::set<int> val_adjacent;
  bool first_anchor = false;
  bool last_anchor = false;
  bool min_anchor = false;
  bool max_anchor = false;

  explicit BivincularPattern(Permutation bottom_row) : bottom(std::move(bottom_row)) {}

  int size() const noexcept { return bottom.size(); }

  bool is_plain() const noexcept {
    return pos_adjacent.empty() && val_adjacent.empty() && !first_anchor && !last_anchor &&
           !min_anchor && !max_anchor;
  }

  // Canonical grammar form, fields in a fixed order:
  // "bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor".
  std::string to_string() const;

  friend bool operator==(const BivincularPattern&, const BivincularPattern&) = default;
};

// Throws ClassViolation, StructureViolation or IndexOutOfRange.
void validate(const BivincularPattern& pattern);

// Range checks on pos_adj / val_adj only. Throws IndexOutOfRange.
void validate_indices(const BivincularPattern& pattern);

// The value-adjacency layout checks alone, usable on any bottom row. For a
// bottom row that avoids 213 and 231 they can never fail.
void validate_value_adjacency_layout(const Permutation& bottom, const std::set<int>& val_adjacent);

// One line, fields separated by ';' (a following space is optional):
//   bottom=<ints>   required
//   pos_adj=<i1,i2,...>   val_adj=<v1,v2,...>
//   first  last  min_anchor  max_anchor
// Throws Syntax for malformed input, then whatever validate() throws.
// BottomRow::Any skips the class and layout checks (index ranges are still
// checked); such patterns are only usable with the brute-force reference.
enum class BottomRow { Avoiding, Any };
BivincularPattern parse_bivincular(std::string_view text, BottomRow bottom_row = BottomRow::Avoiding);

// True if the text looks like the bivincular grammar rather than a plain
// permutation.
bool looks_bivincular(std::string_view text);

}  // namespace avperm
