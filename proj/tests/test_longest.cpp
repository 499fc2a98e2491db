#include <doctest.h>

#include "avperm/av_class.hpp"
#include "avperm/longest.hpp"
#include "avperm/oracle.hpp"
#include "support.hpp"

using namespace avperm;
using avperm::test::P;

TEST_CASE("pivot tables") {
  const auto t = pivot_tables(P("3 9 1 8 6 7 4 5 2"));
  CHECK(t.lis_end[2] == 2);
  CHECK(t.lds_end[9] == 5);
  CHECK(t.lis_end[8] == 3);
}

TEST_CASE("longest avoiding subsequence example") {
  const Permutation text = P("3 9 1 8 6 7 4 5 2");
  const Embedding e = longest_av_subsequence(text);
  CHECK(e.size() == 6);
  CHECK(is_av_213_231(standardize(values_at(text, e))));
  CHECK(longest_av_subsequence(P("1")).size() == 1);
}

TEST_CASE("longest agrees with the oracle") {
  for (int n = 1; n <= 7; ++n) {
    test::for_each_permutation(n, [&](const Permutation& text) {
      const Embedding e = longest_av_subsequence(text);
      CHECK(e.size() == oracle::brute_longest_av(text));
      CHECK(oracle::avoids_213_231(values_at(text, e)));
      const auto t = pivot_tables(text);
      int best = 0;
      for (Position f = 1; f <= n; ++f) best = std::max(best, t.lis_end[f] + t.lds_end[f] - 1);
      CHECK(e.size() == best);
    });
  }
}

TEST_CASE("lcs examples") {
  CHECK(lcs_av(P("1 2 3"), P("3 2 1")).length == 1);
  const auto r = lcs_av(P("2 4 1 3"), P("3 1 4 2"));
  CHECK(r.length == 3);
  CHECK(is_av_213_231(r.pattern));
  CHECK(is_valid_embedding(r.pattern, P("2 4 1 3"), r.in_first));
  CHECK(is_valid_embedding(r.pattern, P("3 1 4 2"), r.in_second));
  CHECK(lcs_av(P("1"), P("1")).length == 1);
}

TEST_CASE("lcs agrees with the oracle") {
  LcsSolver solver;
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = 1; n2 <= 4; ++n2) {
      test::for_each_permutation(n1, [&](const Permutation& a) {
        test::for_each_permutation(n2, [&](const Permutation& b) {
          const auto r = solver.solve(a, b);
          CHECK(r.length == oracle::brute_lcs_av(a, b));
          CHECK(is_valid_embedding(r.pattern, a, r.in_first));
          CHECK(is_valid_embedding(r.pattern, b, r.in_second));
        });
      });
    }
  }
}

TEST_CASE("lcs of a permutation with itself is the longest subsequence") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Permutation p = random_permutation(9, s);
    CHECK(lcs_av(p, p).length == longest_av_subsequence(p).size());
  }
}
