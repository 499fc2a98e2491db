#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = avperm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("match exit codes") {
  CHECK(run({"match", "--pattern", "1 3 2", "--text", "2 4 1 5 3"}).code == 0);
  CHECK(run({"match", "--pattern", "1 2", "--text", "2 1"}).code == 1);
  CHECK(run({"match", "--pattern", "2 1 3", "--text", "2 4 1 5 3"}).code == 2);
  CHECK(run({"match", "--pattern", "2 1 3", "--text", "2 4 1 5 3", "--oracle"}).code == 0);
  CHECK(run({"match", "--pattern", "1 2", "--text", "1 1"}).code == 2);
  CHECK(run({"match", "--pattern", "1 2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("match picks the algorithm") {
  auto algo = [](std::vector<std::string> args) {
    args.push_back("--json");
    const auto r = run(args);
    return nlohmann::json::parse(r.out).at("algorithm").get<std::string>();
  };
  CHECK(algo({"match", "--pattern", "4 3 1 2", "--text", "5 4 1 2 3"}) == "linear");
  CHECK(algo({"match", "--pattern", "4 3 1 2", "--text", "5 3 4 1 2"}) == "factor-dp");
  CHECK(algo({"match", "--pattern", "bottom=1 2; pos_adj=1", "--text", "1 3 2"}) ==
        "bivincular-dp");
}

TEST_CASE("two-line example needs the reference and relabeling") {
  const std::string pattern = "bottom=2 1 4 3; first; pos_adj=3; val_adj=2; max_anchor";
  const auto strict = run({"match", "--pattern", pattern, "--text", "3 2 1 7 8 4 5"});
  CHECK(strict.code == 2);
  CHECK(strict.err.find("--standardize") != std::string::npos);
  const auto dp = run({"match", "--pattern", pattern, "--text", "3 2 1 6 7 4 5"});
  CHECK(dp.code == 2);
  CHECK(dp.err.find("ClassViolation") != std::string::npos);
  const auto ok = run({"match", "--pattern", pattern, "--text", "3 2 1 7 8 4 5", "--standardize",
                       "--oracle", "--json", "--no-timing"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out).at("embedding") == nlohmann::json({1, 2, 5, 6}));
}

TEST_CASE("json reports are byte-stable") {
  const std::vector<std::string> args{"lcs", "2 4 1 3", "3 1 4 2", "--json", "--no-timing"};
  const auto a = run(args);
  CHECK(a.out == run(args).out);
  CHECK(a.out ==
        "{\"command\":\"lcs\",\"inputs\":{\"first\":\"2 4 1 3\",\"second\":\"3 1 4 2\"},"
        "\"algorithm\":\"window-dp\",\"length\":3,\"pattern\":[3,1,2],\"in_first\":[2,3,4],"
        "\"in_second\":[1,2,4],\"steps\":60,\"elapsed_ms\":null}\n");
}

TEST_CASE("other commands") {
  const auto e = run({"enum", "10", "--json", "--no-timing"});
  CHECK(e.code == 0);
  CHECK(nlohmann::json::parse(e.out).at("count") == 512);
  CHECK(run({"enum", "3", "--list"}).out.find("3 2 1\n") != std::string::npos);

  const auto l = run({"longest", "3 9 1 8 6 7 4 5 2", "--json"});
  CHECK(nlohmann::json::parse(l.out).at("length") == 6);
  const auto lo = run({"longest", "3 9 1 8 6 7 4 5 2", "--oracle", "--json"});
  CHECK(nlohmann::json::parse(lo.out).at("length") == 6);

  CHECK(nlohmann::json::parse(run({"lcs", "1 2 3", "3 2 1", "--json"}).out).at("length") == 1);

  const auto g = run({"gen", "8", "--seed", "5", "--count", "3"});
  CHECK(g.code == 0);
  CHECK(g.out == run({"gen", "8", "--seed", "5", "--count", "3"}).out);
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 3);

  const auto s = run({"show", "1 3 2"});
  CHECK(s.out.find("word: AD") != std::string::npos);

  const auto b = run({"bench", "--algo", "longest", "--sizes", "50,100", "--count", "2",
                      "--parallel", "2", "--json"});
  CHECK(b.code == 0);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 2);
  CHECK(run({"bench", "--algo", "nope"}).code == 2);
}
