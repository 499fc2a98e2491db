#include "avperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace avperm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::InvalidClass: return "InvalidClass";
    case ErrorCode::ClassViolation: return "ClassViolation";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n == 0) {
    throw Error(ErrorCode::EmptyInput, "permutation must have at least one element");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::ValueOutOfRange,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::Duplicate, "duplicate value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_integer_list(text));
}

Permutation Permutation::identity(int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "identity needs n >= 1");
  }
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation random_permutation(int n, std::uint64_t seed) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_permutation needs n >= 1");
  }
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  // Fisher-Yates on raw engine output with rejection, so the result does not
  // depend on the standard library's distribution implementations.
  std::mt19937_64 engine(seed);
  for (std::uint64_t i = values.size() - 1; i > 0; --i) {
    const std::uint64_t range = i + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = engine();
    while (draw >= limit) draw = engine();
    std::swap(values[i], values[draw % range]);
  }
  return Permutation(std::move(values));
}

std::vector<Position> Permutation::inverse() const {
  std::vector<Position> inv(values_.size() + 1, 0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[static_cast<std::size_t>(values_[i])] = static_cast<Position>(i + 1);
  }
  return inv;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::vector<int> parse_integer_list(std::string_view text, char separator) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw Error(ErrorCode::EmptyInput, "empty integer list");
  }
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(separator, pos);
    const std::string_view token =
        text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (token.empty()) {
      throw Error(ErrorCode::Syntax, "empty token in \"" + std::string(text) + "\"");
    }
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(ErrorCode::Syntax, "not an integer: \"" + std::string(token) + "\"");
    }
    out.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

Permutation standardize(std::span<const int> distinct_values) {
  if (distinct_values.empty()) {
    throw Error(ErrorCode::EmptyInput, "cannot standardize an empty sequence");
  }
  std::vector<int> sorted(distinct_values.begin(), distinct_values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::Duplicate, "sequence has repeated values");
  }
  std::vector<int> ranks;
  ranks.reserve(distinct_values.size());
  for (int v : distinct_values) {
    ranks.push_back(
        static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return Permutation(std::move(ranks));
}

bool is_order_isomorphic(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

std::string to_string(const Embedding& embedding) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < embedding.positions.size(); ++i) {
    if (i != 0) out << ',';
    out << embedding.positions[i];
  }
  out << ')';
  return out.str();
}

std::vector<int> values_at(const Permutation& text, const Embedding& embedding) {
  std::vector<int> out;
  out.reserve(embedding.positions.size());
  for (Position p : embedding.positions) out.push_back(text.value(p));
  return out;
}

bool is_valid_embedding(const Permutation& pattern, const Permutation& text,
                        const Embedding& embedding) {
  if (embedding.size() != pattern.size()) return false;
  Position prev = 0;
  for (Position p : embedding.positions) {
    if (p <= prev || p > text.size()) return false;
    prev = p;
  }
  return is_order_isomorphic(pattern.values(), values_at(text, embedding));
}

}  // namespace avperm
