#include <doctest.h>

#include <set>

#include "avperm/av_class.hpp"
#include "avperm/oracle.hpp"
#include "support.hpp"

using namespace avperm;
using avperm::test::P;

TEST_CASE("parse accepts single-space lists") {
  CHECK(P("3 9 1 8 6 7 4 5 2").size() == 9);
  CHECK(P("2 1\n").to_string() == "2 1");
  CHECK(P("1").value(1) == 1);
}

TEST_CASE("parse rejects malformed input") {
  auto code = [](std::string_view text) {
    try {
      Permutation::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code("") == ErrorCode::EmptyInput);
  CHECK(code("1 1") == ErrorCode::Duplicate);
  CHECK(code("1 3") == ErrorCode::ValueOutOfRange);
  CHECK(code("0 1") == ErrorCode::ValueOutOfRange);
  CHECK(code("1  2") == ErrorCode::Syntax);
  CHECK(code("1,2") == ErrorCode::Syntax);
  CHECK(code(" 1 2") == ErrorCode::Syntax);
  CHECK(code("a b") == ErrorCode::Syntax);
}

TEST_CASE("standardize flattens distinct values") {
  const std::vector<int> raw{3, 2, 1, 7, 8, 4, 5};
  CHECK(standardize(raw) == P("3 2 1 6 7 4 5"));
  const std::vector<int> dup{4, 4};
  CHECK_THROWS_AS(standardize(dup), Error);
}

TEST_CASE("inverse") {
  const auto inv = P("3 1 2").inverse();
  CHECK(inv[1] == 2);
  CHECK(inv[2] == 3);
  CHECK(inv[3] == 1);
}

TEST_CASE("ascent descent word") {
  CHECK(ascent_descent_word(P("1 2 3 9 8 4 7 6 5")).to_string() == "AAADDADD");
  CHECK(word_to_permutation(AscDescWord::parse("DDA")) == P("4 3 1 2"));
  CHECK(ascent_descent_word(P("1")).size() == 0);
  CHECK(word_to_permutation(AscDescWord{}) == P("1"));
  CHECK_THROWS_AS(AscDescWord::parse("AXD"), Error);
}

TEST_CASE("class membership agrees with the triple scan") {
  for (int n = 1; n <= 7; ++n) {
    test::for_each_permutation(n, [](const Permutation& p) {
      CHECK(is_av_213_231(p) == oracle::avoids_213_231(p.values()));
    });
  }
}

TEST_CASE("word bijection round trips") {
  for (int n = 1; n <= 9; ++n) {
    std::set<Permutation> seen;
    for_each_av(n, [&](const Permutation& p) {
      CHECK(is_av_213_231(p));
      CHECK(word_to_permutation(ascent_descent_word(p)) == p);
      seen.insert(p);
    });
    CHECK(seen.size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("random members are avoiding and seed-deterministic") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Permutation p = random_av(30, s);
    CHECK(is_av_213_231(p));
    CHECK(p == random_av(30, s));
  }
  CHECK(random_av(30, 1) != random_av(30, 2));
  CHECK(random_permutation(12, 7) == random_permutation(12, 7));
}

TEST_CASE("factor decomposition") {
  const auto f = factor_decompose(P("1 2 3 9 8 4 7 6 5"));
  REQUIRE(f.count() == 4);
  CHECK(f.lmei(4) == 1);
  CHECK(f.lmei(3) == 4);
  CHECK(f.lmei(2) == 6);
  CHECK(f.lmei(1) == 7);
  CHECK(f.factor(4).kind == Kind::Ascent);
  CHECK(f.factor(3).kind == Kind::Descent);
  CHECK(f.factor(1).size() == 3);

  const auto g = factor_decompose(P("1 3 2"));
  REQUIRE(g.count() == 2);
  CHECK(g.factor(2) == Factor{Kind::Ascent, 1, 1});
  CHECK(g.factor(1) == Factor{Kind::Descent, 2, 3});

  const auto single = factor_decompose(P("1"));
  REQUIRE(single.count() == 1);
  CHECK(single.factor(1).size() == 1);
}

TEST_CASE("factors partition the pattern and alternate") {
  for (int n = 1; n <= 8; ++n) {
    for_each_av(n, [&](const Permutation& p) {
      const auto f = factor_decompose(p);
      Position next = 1;
      for (std::size_t t = 0; t < f.left_to_right().size(); ++t) {
        const Factor& fac = f.left_to_right()[t];
        CHECK(fac.start == next);
        next = fac.end + 1;
        if (t > 0) CHECK(fac.kind != f.left_to_right()[t - 1].kind);
      }
      CHECK(next == n + 1);
    });
  }
}

TEST_CASE("embedding helpers") {
  const Permutation text = P("5 3 4 1 2");
  const Embedding e{{1, 2, 4, 5}};
  CHECK(to_string(e) == "(1,2,4,5)");
  CHECK(values_at(text, e) == std::vector<int>{5, 3, 1, 2});
  CHECK(is_valid_embedding(P("4 3 1 2"), text, e));
  CHECK_FALSE(is_valid_embedding(P("4 3 1 2"), text, Embedding{{1, 2, 3, 4}}));
  CHECK_FALSE(is_valid_embedding(P("4 3 1 2"), text, Embedding{{2, 1, 4, 5}}));
}
