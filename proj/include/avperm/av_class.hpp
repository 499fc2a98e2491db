#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "avperm/permutation.hpp"

namespace avperm {

// Kind of a non-final element: ascent if p[i] < p[i+1], descent otherwise.
// Also used as the kind of a factor.
enum class Kind : char { Ascent = 'A', Descent = 'D' };

inline Kind opposite(Kind k) { return k == Kind::Ascent ? Kind::Descent : Kind::Ascent; }

// Ascent/descent word of a permutation, length n - 1. Restricted to
// Av_n(213,231) this is a bijection onto all binary words of length n - 1.
struct AscDescWord {
  std::vector<Kind> letters;

  int size() const noexcept { return static_cast<int>(letters.size()); }

  // "AAADDADD"; the empty word prints as "".
  std::string to_string() const;
  // Accepts letters 'A' and 'D' only.
  static AscDescWord parse(std::string_view text);

  friend bool operator==(const AscDescWord&, const AscDescWord&) = default;
};

AscDescWord ascent_descent_word(const Permutation& p);

// Every element except the last is the maximum or the minimum of its
// suffix. O(n).
bool is_av_213_231(const Permutation& p);

// Inverse of ascent_descent_word on Av(213,231): scan the word, emitting
// the smallest unused value on A and the largest on D; the last unused value
// closes the permutation.
Permutation word_to_permutation(const AscDescWord& word);

// Word of length n - 1 whose letter i is D iff bit i of index is set.
AscDescWord word_from_index(int n, std::uint64_t index);

// All 2^(n-1) members of Av_n(213,231), in word-index order. n in 1..63.
void for_each_av(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_av(int n);

// Uniform over Av_n(213,231); deterministic in seed.
Permutation random_av(int n, std::uint64_t seed);

struct Factor {
  Kind kind;
  Position start;  // 1-based, inclusive
  Position end;    // 1-based, inclusive

  int size() const noexcept { return end - start + 1; }

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Maximal runs of same-kind elements; the final element joins the last run.
// Factors are labelled F(m) ... F(1) from left to right.
class FactorDecomposition {
 public:
  explicit FactorDecomposition(std::vector<Factor> left_to_right)
      : factors_(std::move(left_to_right)) {}

  int count() const noexcept { return static_cast<int>(factors_.size()); }

  // F(label), label in 1..count(); F(1) is the rightmost factor.
  const Factor& factor(int label) const {
    assert(label >= 1 && label <= count());
    return factors_[static_cast<std::size_t>(count() - label)];
  }

  // Index in the pattern of the leftmost element of F(label).
  Position lmei(int label) const { return factor(label).start; }

  const std::vector<Factor>& left_to_right() const noexcept { return factors_; }

 private:
  std::vector<Factor> factors_;
};

// Defined for every permutation; a length-1 permutation is one ascent
// factor.
FactorDecomposition factor_decompose(const Permutation& p);

}  // namespace avperm
