#include <doctest.h>

#include "avperm/oracle.hpp"
#include "support.hpp"

using namespace avperm;
using avperm::test::P;

TEST_CASE("brute match examples") {
  const Permutation text = P("3 9 1 8 6 7 4 5 2");
  const auto m = oracle::brute_match(P("5 1 3 4 2"), text);
  REQUIRE(m);
  CHECK(m->positions == std::vector<Position>{2, 3, 5, 6, 7});
  CHECK_FALSE(oracle::brute_match(P("1 2 3 4"), text));
  CHECK(oracle::brute_match(P("1 2 3"), text)->positions == std::vector<Position>{1, 5, 6});
}

TEST_CASE("brute lm example") {
  CHECK(oracle::brute_lm(P("1 3 2"), P("2 4 1 5 3"), 1, 2) == 3);
  CHECK(oracle::brute_lm(P("1 3 2"), P("2 4 1 5 3"), 2, 1) == 4);
  CHECK_FALSE(oracle::brute_lm(P("1 2"), P("2 1"), 1, 1));
}

TEST_CASE("avoidance triple scan") {
  CHECK(oracle::avoids_213_231(std::vector<int>{1, 2, 3, 9, 8, 4, 7, 6, 5}));
  CHECK_FALSE(oracle::avoids_213_231(std::vector<int>{2, 1, 3}));
  CHECK_FALSE(oracle::avoids_213_231(std::vector<int>{2, 3, 1}));
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(oracle::brute_longest_av(random_permutation(13, 1)), Error);
  CHECK_THROWS_AS(oracle::brute_lcs_av(random_permutation(9, 1), P("1")), Error);
  CHECK_THROWS_AS(oracle::brute_match(P("1"), random_permutation(41, 1)), Error);
}

TEST_CASE("contained patterns") {
  const auto s = oracle::contained_av_patterns(P("2 1 3"));
  CHECK(s.count({1}) == 1);
  CHECK(s.count({1, 2}) == 1);
  CHECK(s.count({2, 1}) == 1);
  CHECK(s.count({2, 1, 3}) == 0);
  CHECK(oracle::brute_lcs_av(P("1 2 3"), P("3 2 1")) == 1);
}
