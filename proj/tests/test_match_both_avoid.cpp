#include <doctest.h>

#include "avperm/match_both_avoid.hpp"
#include "avperm/oracle.hpp"
#include "support.hpp"

using namespace avperm;
using avperm::test::P;

TEST_CASE("word subsequence example") {
  // DDA is a subsequence of DDDA.
  const auto m = matches_both_avoiding(P("4 3 1 2"), P("5 4 3 1 2"));
  REQUIRE(m);
  CHECK(m->positions == std::vector<Position>{1, 2, 4, 5});
}

TEST_CASE("trivial cases") {
  CHECK(matches_both_avoiding(P("1"), P("1"))->positions == std::vector<Position>{1});
  CHECK_FALSE(matches_both_avoiding(P("1 2"), P("2 1")));
  CHECK_FALSE(matches_both_avoiding(P("1 2 3"), P("1 2")));
}

TEST_CASE("rejects texts outside the class") {
  CHECK_THROWS_AS(matches_both_avoiding(P("1 2"), P("2 1 3")), Error);
  CHECK_THROWS_AS(OnlineMatcher(P("2 1 3")), Error);
}

TEST_CASE("online matcher reports text class as it goes") {
  OnlineMatcher m(P("1 2"));
  m.push(2);
  m.push(1);
  CHECK(m.text_avoids());
  m.push(3);
  CHECK_FALSE(m.text_avoids());
  CHECK(m.consumed() == 3);
}

TEST_CASE("agrees with the oracle on small avoiding pairs") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& pattern : enumerate_av(k)) {
      for (int n = 1; n <= 7; ++n) {
        for_each_av(n, [&](const Permutation& text) {
          SolveStats stats;
          const auto got = matches_both_avoiding(pattern, text, &stats);
          CHECK(got.has_value() == oracle::brute_match(pattern, text).has_value());
          if (got) CHECK(is_valid_embedding(pattern, text, *got));
          CHECK(stats.steps == static_cast<std::uint64_t>(n));
        });
      }
    }
  }
}
