#include "avperm/bivincular_pattern.hpp"

#include <optional>
#include <vector>

#include "avperm/av_class.hpp"

namespace avperm {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string join(const std::set<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

std::string BivincularPattern::to_string() const {
  std::string out = "bottom=" + bottom.to_string();
  if (first_anchor) out += "; first";
  if (last_anchor) out += "; last";
  if (!pos_adjacent.empty()) out += "; pos_adj=" + join(pos_adjacent);
  if (!val_adjacent.empty()) out += "; val_adj=" + join(val_adjacent);
  if (min_anchor) out += "; min_anchor";
  if (max_anchor) out += "; max_anchor";
  return out;
}

void validate_value_adjacency_layout(const Permutation& bottom,
                                     const std::set<int>& val_adjacent) {
  const int k = bottom.size();
  const auto pos = bottom.inverse();
  // Kind of the element at 1-based position i < k; the last element has none.
  auto is_ascent = [&](Position i) { return bottom.value(i) < bottom.value(i + 1); };
  for (int v : val_adjacent) {
    if (v < 1 || v >= k) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "val_adj entry " + std::to_string(v) + " outside 1.." + std::to_string(k - 1));
    }
    const Position lo = pos[static_cast<std::size_t>(v)];
    const Position hi = pos[static_cast<std::size_t>(v + 1)];
    // v descent before v+1 ascent (or mirrored) cannot be realized.
    if (lo < hi && lo < k && hi < k && !is_ascent(lo) && is_ascent(hi)) {
      throw Error(ErrorCode::StructureViolation,
                  "values " + std::to_string(v) + "," + std::to_string(v + 1) +
                      ": descent element precedes ascent partner");
    }
    if (hi < lo && hi < k && lo < k && is_ascent(hi) && !is_ascent(lo)) {
      throw Error(ErrorCode::StructureViolation,
                  "values " + std::to_string(v + 1) + "," + std::to_string(v) +
                      ": ascent element precedes descent partner");
    }
    // Two same-kind partners: everything strictly between has the other kind.
    if (lo < k && hi < k && is_ascent(lo) == is_ascent(hi)) {
      const bool ascent = is_ascent(lo);
      // Ascent partners appear in value order, descent partners in reverse.
      if (ascent != (lo < hi)) {
        throw Error(ErrorCode::StructureViolation,
                    "values " + std::to_string(v) + "," + std::to_string(v + 1) +
                        ": same-kind partners in the wrong order");
      }
      for (Position l = std::min(lo, hi) + 1; l < std::max(lo, hi); ++l) {
        if (is_ascent(l) == ascent) {
          throw Error(ErrorCode::StructureViolation,
                      "values " + std::to_string(v) + "," + std::to_string(v + 1) +
                          ": same-kind element at position " + std::to_string(l) +
                          " between value-adjacent partners");
        }
      }
    }
  }
}

void validate_indices(const BivincularPattern& pattern) {
  const int k = pattern.size();
  auto check = [k](const std::set<int>& entries, const char* name) {
    for (int i : entries) {
      if (i < 1 || i >= k) {
        throw Error(ErrorCode::IndexOutOfRange, std::string(name) + " entry " + std::to_string(i) +
                                                    " outside 1.." + std::to_string(k - 1));
      }
    }
  };
  check(pattern.pos_adjacent, "pos_adj");
  check(pattern.val_adjacent, "val_adj");
}

void validate(const BivincularPattern& pattern) {
  if (!is_av_213_231(pattern.bottom)) {
    throw Error(ErrorCode::ClassViolation,
                "bottom row " + pattern.bottom.to_string() + " contains 213 or 231");
  }
  validate_indices(pattern);
  validate_value_adjacency_layout(pattern.bottom, pattern.val_adjacent);
}

BivincularPattern parse_bivincular(std::string_view text, BottomRow bottom_row) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t next = text.find(';', start);
    fields.push_back(trim(text.substr(start, next == std::string_view::npos ? next : next - start)));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }

  std::optional<Permutation> bottom;
  std::set<int> pos_adj;
  std::set<int> val_adj;
  bool first = false, last = false, min_anchor = false, max_anchor = false;
  std::set<std::string, std::less<>> seen;

  for (std::string_view field : fields) {
    if (field.empty()) {
      throw Error(ErrorCode::Syntax, "empty field in bivincular pattern");
    }
    const std::size_t eq = field.find('=');
    const std::string_view key = trim(field.substr(0, eq));
    const std::string_view value = eq == std::string_view::npos ? std::string_view{}
                                                                : trim(field.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw Error(ErrorCode::Syntax, "repeated field '" + std::string(key) + "'");
    }
    auto flag = [&](bool& target) {
      if (eq != std::string_view::npos) {
        throw Error(ErrorCode::Syntax, "flag '" + std::string(key) + "' takes no value");
      }
      target = true;
    };
    auto list = [&](std::set<int>& target) {
      if (eq == std::string_view::npos || value.empty()) {
        throw Error(ErrorCode::Syntax, "field '" + std::string(key) + "' needs a value list");
      }
      for (int v : parse_integer_list(value, ',')) {
        if (!target.insert(v).second) {
          throw Error(ErrorCode::Syntax,
                      "repeated entry " + std::to_string(v) + " in '" + std::string(key) + "'");
        }
      }
    };

    if (key == "bottom") {
      if (eq == std::string_view::npos) throw Error(ErrorCode::Syntax, "bottom needs a value");
      bottom = Permutation::parse(value);
    } else if (key == "pos_adj") {
      list(pos_adj);
    } else if (key == "val_adj") {
      list(val_adj);
    } else if (key == "first") {
      flag(first);
    } else if (key == "last") {
      flag(last);
    } else if (key == "min_anchor") {
      flag(min_anchor);
    } else if (key == "max_anchor") {
      flag(max_anchor);
    } else {
      throw Error(ErrorCode::Syntax, "unknown field '" + std::string(key) + "'");
    }
  }
  if (!bottom) {
    throw Error(ErrorCode::Syntax, "missing required field 'bottom'");
  }

  BivincularPattern pattern(std::move(*bottom));
  pattern.pos_adjacent = std::move(pos_adj);
  pattern.val_adjacent = std::move(val_adj);
  pattern.first_anchor = first;
  pattern.last_anchor = last;
  pattern.min_anchor = min_anchor;
  pattern.max_anchor = max_anchor;
  if (bottom_row == BottomRow::Avoiding) {
    validate(pattern);
  } else {
    validate_indices(pattern);
  }
  return pattern;
}

bool looks_bivincular(std::string_view text) {
  return text.find("bottom") != std::string_view::npos || text.find(';') != std::string_view::npos;
}

}  // namespace avperm
