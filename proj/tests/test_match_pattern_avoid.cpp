#include <doctest.h>

#include "avperm/bounded_run.hpp"
#include "avperm/match_pattern_avoid.hpp"
#include "avperm/oracle.hpp"
#include "support.hpp"

using namespace avperm;
using avperm::test::P;

TEST_CASE("bounded runs") {
  const Permutation text = P("3 9 1 8 6 7 4 5 2");
  CHECK(bounded_lis(text, 3, 8, 6) == 3);
  CHECK(bounded_lds(text, 2, 7, 3) == 4);
  CHECK(bounded_lis(text, 1, 9, 1) == 0);
  CHECK_THROWS_AS(bounded_lis(text, 5, 4, 3), Error);
  CHECK_THROWS_AS(bounded_lds(text, 1, 10, 3), Error);
}

TEST_CASE("bounded runs match a quadratic reference") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Permutation t = random_permutation(14, s);
    const int n = t.size();
    for (Position j = 1; j <= n; ++j) {
      for (Position j2 = j; j2 <= n; ++j2) {
        for (int bound = 1; bound <= n + 1; ++bound) {
          // Longest run starting at j, staying inside j..j2, values on the
          // bound's side of it.
          std::vector<int> inc(static_cast<std::size_t>(n) + 1, 0);
          std::vector<int> dec(static_cast<std::size_t>(n) + 1, 0);
          int best_inc = 0;
          int best_dec = 0;
          for (Position p = j; p <= j2; ++p) {
            const int v = t.value(p);
            if (p == j) {
              inc[p] = v < bound ? 1 : 0;
              dec[p] = v > bound ? 1 : 0;
            } else {
              for (Position q = j; q < p; ++q) {
                if (inc[q] > 0 && t.value(q) < v && v < bound) inc[p] = std::max(inc[p], inc[q] + 1);
                if (dec[q] > 0 && t.value(q) > v && v > bound) dec[p] = std::max(dec[p], dec[q] + 1);
              }
            }
            best_inc = std::max(best_inc, inc[p]);
            best_dec = std::max(best_dec, dec[p]);
          }
          CHECK(bounded_lis(t, j, j2, bound) == best_inc);
          CHECK(bounded_lds(t, j, j2, bound) == best_dec);
        }
      }
    }
  }
}

TEST_CASE("LM cells from worked examples") {
  const auto a = build_lm_table(P("1 2 3"), P("1 4 2 3"));
  CHECK(a.at(1, 1) == 3);

  const auto b = build_lm_table(P("1 3 2"), P("2 4 1 5 3"));
  CHECK(b.at(1, 2) == 3);
  CHECK(b.at(2, 1) == 4);
}

TEST_CASE("factor DP examples") {
  const Permutation text = P("3 9 1 8 6 7 4 5 2");
  const auto m = matches_pattern_avoiding(P("1 2 3"), text);
  REQUIRE(m);
  CHECK(is_valid_embedding(P("1 2 3"), text, *m));
  // (3,7,8) is another valid witness for this pair.
  CHECK(is_valid_embedding(P("1 2 3"), text, Embedding{{3, 7, 8}}));
  CHECK_FALSE(matches_pattern_avoiding(P("1 2 3 4"), text));

  const auto c = matches_pattern_avoiding(P("1 3 2"), P("2 4 1 5 3"));
  REQUIRE(c);
  CHECK(is_valid_embedding(P("1 3 2"), P("2 4 1 5 3"), *c));

  const auto d = matches_pattern_avoiding(P("4 3 1 2"), P("5 3 4 1 2"));
  REQUIRE(d);
  CHECK(d->positions == std::vector<Position>{1, 2, 4, 5});

  CHECK_THROWS_AS(matches_pattern_avoiding(P("2 1 3"), text), Error);
}

TEST_CASE("LM cells and decisions agree with the oracle") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& pattern : enumerate_av(k)) {
      for (int n = 1; n <= 6; ++n) {
        test::for_each_permutation(n, [&](const Permutation& text) {
          const auto table = build_lm_table(pattern, text);
          for (int label = 1; label <= table.factor_count(); ++label) {
            for (Position j = 1; j <= n; ++j) {
              CHECK(table.at(label, j) == oracle::brute_lm(pattern, text, label, j));
            }
          }
          const auto got = matches_pattern_avoiding(pattern, text);
          CHECK(got.has_value() == oracle::brute_match(pattern, text).has_value());
          if (got) CHECK(is_valid_embedding(pattern, text, *got));
        });
      }
    }
  }
}

TEST_CASE("reconstructed suffixes realize their LM value") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Permutation pattern = random_av(5, s);
    const Permutation text = random_permutation(11, s + 1000);
    const auto table = build_lm_table(pattern, text);
    const auto& f = table.factors();
    for (int label = 1; label <= table.factor_count(); ++label) {
      for (Position j = 1; j <= text.size(); ++j) {
        const auto lm = table.at(label, j);
        if (!lm) continue;
        const Embedding e = reconstruct_suffix(table, text, label, j);
        const Position first = f.lmei(label);
        std::vector<int> sub(pattern.values().begin() + (first - 1), pattern.values().end());
        CHECK(e.positions.front() == j);
        CHECK(is_order_isomorphic(sub, values_at(text, e)));
      }
    }
  }
}
