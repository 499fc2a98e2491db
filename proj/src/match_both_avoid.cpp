#include "avperm/match_both_avoid.hpp"

#include <limits>

namespace avperm {

OnlineMatcher::OnlineMatcher(const Permutation& pattern)
    : descent_ceiling_(std::numeric_limits<int>::max()) {
  if (!is_av_213_231(pattern)) {
    throw Error(ErrorCode::InvalidClass,
                "pattern " + pattern.to_string() + " contains 213 or 231");
  }
  word_ = ascent_descent_word(pattern);
  matched_.reserve(word_.letters.size());
}

void OnlineMatcher::push(int value) {
  const Position pos = ++consumed_;
  if (pos == 1) {
    previous_ = value;
    if (word_.letters.empty()) match_ = Embedding{{1}};
    return;
  }

  const Kind kind = previous_ < value ? Kind::Ascent : Kind::Descent;
  if (kind == Kind::Ascent) {
    ascent_floor_ = previous_;
  } else {
    descent_ceiling_ = previous_;
  }
  if (value <= ascent_floor_ || value >= descent_ceiling_) text_avoids_ = false;
  previous_ = value;

  if (match_) return;
  if (kind == word_.letters[matched_.size()]) {
    matched_.push_back(pos - 1);
    if (matched_.size() == word_.letters.size()) {
      Embedding e;
      e.positions = matched_;
      e.positions.push_back(pos);
      match_ = std::move(e);
    }
  }
}

std::optional<Embedding> matches_both_avoiding(const Permutation& pattern,
                                               const Permutation& text, SolveStats* stats) {
  OnlineMatcher matcher(pattern);
  for (int v : text.values()) matcher.push(v);
  if (stats) stats->steps += static_cast<std::uint64_t>(matcher.consumed());
  if (!matcher.text_avoids()) {
    throw Error(ErrorCode::InvalidClass, "text contains 213 or 231");
  }
  return matcher.match();
}

}  // namespace avperm
