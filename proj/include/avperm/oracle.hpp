#pragma once

#include <optional>
#include <set>
#include <vector>

#include "avperm/bivincular_pattern.hpp"
#include "avperm/permutation.hpp"

// Exhaustive reference implementations. Everything here is a direct
// transcription of a definition, shares no code with the solvers, and throws
// Error{SizeGuard} instead of running unreasonably long.
namespace avperm::oracle {

inline constexpr int kMaxPatternLength = 12;
inline constexpr int kMaxTextLength = 40;
inline constexpr int kMaxLongestText = 12;
inline constexpr int kMaxLcsText = 8;

// Triple scan: no i < j < l forms 213 or 231.
bool avoids_213_231(std::span<const int> values);

// Lexicographically smallest embedding, by backtracking.
std::optional<Embedding> brute_match(const Permutation& pattern, const Permutation& text);

// Checks order-isomorphism plus all six constraint kinds literally.
bool is_bivincular_embedding(const BivincularPattern& pattern, const Permutation& text,
                             const Embedding& embedding);

// Lexicographically smallest embedding satisfying is_bivincular_embedding.
std::optional<Embedding> brute_match_bivincular(const BivincularPattern& pattern,
                                                const Permutation& text);

// Length of a longest avoiding subsequence, over all 2^n subsequences.
int brute_longest_av(const Permutation& text);

// Every avoiding pattern contained in text, flattened, by enumerating all
// subsequences.
std::set<std::vector<int>> contained_av_patterns(const Permutation& text);

// Longest avoiding pattern contained in both texts.
int brute_lcs_av(const Permutation& first, const Permutation& second);

// The extremal LM value by enumerating every matching of the pattern suffix
// beginning at factor `label` with its first element on text[j]: over those
// matchings, the smallest maximum if that factor ascends, else the largest
// minimum. Factors are recomputed here from pairwise comparisons.
std::optional<int> brute_lm(const Permutation& pattern, const Permutation& text, int label,
                            Position j);

}  // namespace avperm::oracle
