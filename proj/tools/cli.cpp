#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "avperm/av_class.hpp"
#include "avperm/bivincular.hpp"
#include "avperm/longest.hpp"
#include "avperm/match_both_avoid.hpp"
#include "avperm/match_pattern_avoid.hpp"
#include "avperm/oracle.hpp"

namespace avperm::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json embedding_json(const Embedding& e) { return json(e.positions); }

json values_json(std::span<const int> values) {
  return json(std::vector<int>(values.begin(), values.end()));
}

Permutation read_permutation(const std::string& text, bool relabel) {
  if (!relabel) return Permutation::parse(text);
  try {
    return Permutation::parse(text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ValueOutOfRange) throw;
  }
  return standardize(parse_integer_list(text));
}

// Shared output flags.
struct OutputOptions {
  bool json = false;
  bool no_timing = false;

  void attach(CLI::App* app) {
    app->add_flag("--json", json, "Emit the report as a single JSON object");
    app->add_flag("--no-timing", no_timing, "Report elapsed_ms as null (byte-stable output)");
  }
};

void emit(const RunReport& report, const OutputOptions& opts, std::ostream& out) {
  RunReport r = report;
  if (opts.no_timing) r.elapsed_ms.reset();
  if (opts.json) {
    out << r.to_json().dump() << '\n';
  } else {
    out << r.to_text();
  }
}

// ---------------------------------------------------------------------------
// match

struct MatchOptions {
  std::string pattern;
  std::string text;
  bool oracle = false;
  bool standardize = false;
  OutputOptions output;
};

int cmd_match(const MatchOptions& o, std::ostream& out) {
  const Permutation text = read_permutation(o.text, o.standardize);
  RunReport r;
  r.command = "match";
  std::optional<Embedding> found;
  SolveStats stats;
  const auto start = Clock::now();

  if (looks_bivincular(o.pattern)) {
    const BivincularPattern pattern =
        parse_bivincular(o.pattern, o.oracle ? BottomRow::Any : BottomRow::Avoiding);
    r.inputs = {{"pattern", pattern.to_string()}, {"text", text.to_string()}};
    if (o.oracle) {
      r.algorithm = "oracle-bivincular";
      found = oracle::brute_match_bivincular(pattern, text);
    } else {
      r.algorithm = "bivincular-dp";
      found = matches_bivincular(pattern, text, &stats);
    }
  } else {
    const Permutation pattern = read_permutation(o.pattern, o.standardize);
    r.inputs = {{"pattern", pattern.to_string()}, {"text", text.to_string()}};
    if (o.oracle) {
      r.algorithm = "oracle";
      found = oracle::brute_match(pattern, text);
    } else if (!is_av_213_231(pattern)) {
      throw Error(ErrorCode::InvalidClass, "pattern " + pattern.to_string() +
                                               " contains 213 or 231; only (213,231)-avoiding "
                                               "patterns are supported (use --oracle for small "
                                               "inputs)");
    } else if (is_av_213_231(text)) {
      r.algorithm = "linear";
      found = matches_both_avoiding(pattern, text, &stats);
    } else {
      r.algorithm = "factor-dp";
      found = matches_pattern_avoiding(pattern, text, &stats);
    }
  }
  r.elapsed_ms = ms_since(start);
  r.steps = stats.steps;
  r.decision = found.has_value();
  if (found) {
    r.embedding = *found;
    r.details.emplace_back("values", values_json(values_at(text, *found)));
  }
  emit(r, o.output, out);
  return found ? kOk : kNoMatch;
}

// ---------------------------------------------------------------------------
// longest / lcs

struct LongestOptions {
  std::string text;
  bool oracle = false;
  bool standardize = false;
  OutputOptions output;
};

int cmd_longest(const LongestOptions& o, std::ostream& out) {
  const Permutation text = read_permutation(o.text, o.standardize);
  RunReport r;
  r.command = "longest";
  r.inputs = {{"text", text.to_string()}};
  SolveStats stats;
  const auto start = Clock::now();
  if (o.oracle) {
    r.algorithm = "oracle";
    r.length = oracle::brute_longest_av(text);
  } else {
    r.algorithm = "pivot-lis-lds";
    const Embedding e = longest_av_subsequence(text, &stats);
    r.length = e.size();
    r.embedding = e;
    r.details.emplace_back("values", values_json(values_at(text, e)));
  }
  r.elapsed_ms = ms_since(start);
  r.steps = stats.steps;
  emit(r, o.output, out);
  return kOk;
}

struct LcsOptions {
  std::string first;
  std::string second;
  bool oracle = false;
  bool standardize = false;
  OutputOptions output;
};

int cmd_lcs(const LcsOptions& o, std::ostream& out) {
  const Permutation a = read_permutation(o.first, o.standardize);
  const Permutation b = read_permutation(o.second, o.standardize);
  RunReport r;
  r.command = "lcs";
  r.inputs = {{"first", a.to_string()}, {"second", b.to_string()}};
  SolveStats stats;
  const auto start = Clock::now();
  if (o.oracle) {
    r.algorithm = "oracle";
    r.length = oracle::brute_lcs_av(a, b);
  } else {
    r.algorithm = "window-dp";
    const LcsResult res = lcs_av(a, b, &stats);
    r.length = res.length;
    r.details.emplace_back("pattern", values_json(res.pattern.values()));
    r.details.emplace_back("in_first", embedding_json(res.in_first));
    r.details.emplace_back("in_second", embedding_json(res.in_second));
  }
  r.elapsed_ms = ms_since(start);
  r.steps = stats.steps;
  emit(r, o.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// gen / enum / show

struct GenOptions {
  int n = 0;
  std::uint64_t seed = 1;
  int count = 1;
  OutputOptions output;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  if (o.n < 1) throw Error(ErrorCode::InvalidArgument, "gen needs n >= 1");
  if (o.count < 0) throw Error(ErrorCode::InvalidArgument, "gen needs count >= 0");
  std::vector<Permutation> perms;
  for (int c = 0; c < o.count; ++c) {
    perms.push_back(random_av(o.n, o.seed + static_cast<std::uint64_t>(c)));
  }
  if (!o.output.json) {
    for (const auto& p : perms) out << p.to_string() << '\n';
    return kOk;
  }
  RunReport r;
  r.command = "gen";
  r.inputs = {{"n", o.n}, {"seed", o.seed}, {"count", o.count}};
  r.algorithm = "uniform-word";
  json list = json::array();
  for (const auto& p : perms) list.push_back(p.to_string());
  r.details.emplace_back("permutations", std::move(list));
  emit(r, o.output, out);
  return kOk;
}

struct EnumOptions {
  int n = 0;
  bool list = false;
  OutputOptions output;
};

int cmd_enum(const EnumOptions& o, std::ostream& out) {
  if (o.n < 1 || o.n > 24) {
    throw Error(ErrorCode::InvalidArgument, "enum needs 1 <= n <= 24");
  }
  RunReport r;
  r.command = "enum";
  r.inputs = {{"n", o.n}};
  r.algorithm = "word-bijection";
  std::uint64_t count = 0;
  json members = json::array();
  const auto start = Clock::now();
  for_each_av(o.n, [&](const Permutation& p) {
    ++count;
    if (o.list) {
      if (o.output.json) {
        members.push_back(p.to_string());
      } else {
        out << p.to_string() << '\n';
      }
    }
  });
  r.elapsed_ms = ms_since(start);
  r.details.emplace_back("count", count);
  if (o.list && o.output.json) r.details.emplace_back("members", std::move(members));
  emit(r, o.output, out);
  return kOk;
}

struct ShowOptions {
  std::string perm;
  bool standardize = false;
};

int cmd_show(const ShowOptions& o, std::ostream& out) {
  const Permutation p = read_permutation(o.perm, o.standardize);
  const int n = p.size();
  const int width = static_cast<int>(std::to_string(n).size());
  for (int v = n; v >= 1; --v) {
    out << std::setw(width) << v << " |";
    for (int i = 1; i <= n; ++i) out << ' ' << (p.value(i) == v ? '*' : '.');
    out << '\n';
  }
  out << std::string(static_cast<std::size_t>(width), ' ') << " +"
      << std::string(static_cast<std::size_t>(2 * n), '-') << '\n';
  const AscDescWord w = ascent_descent_word(p);
  out << std::string(static_cast<std::size_t>(width), ' ') << "  ";
  for (Kind k : w.letters) out << ' ' << static_cast<char>(k);
  out << '\n';
  out << "word: " << w.to_string() << '\n';
  out << "avoids 213,231: " << (is_av_213_231(p) ? "yes" : "no") << '\n';
  const FactorDecomposition f = factor_decompose(p);
  out << "factors:";
  for (int label = f.count(); label >= 1; --label) {
    const Factor& fac = f.factor(label);
    out << " F(" << label << ")=";
    for (Position i = fac.start; i <= fac.end; ++i) {
      out << p.value(i) << (i == fac.end ? "" : ",");
    }
    out << (fac.kind == Kind::Ascent ? "[A]" : "[D]");
  }
  out << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string algo = "linear";
  std::vector<int> sizes{1000, 10000};
  int pattern_length = 8;
  std::string pattern;
  std::uint64_t seed = 1;
  int count = 1;
  std::string batch;
  int parallel = 1;
  OutputOptions output;
};

struct Instance {
  std::optional<Permutation> text;
  std::optional<Permutation> second;
};

struct Outcome {
  bool decision = false;
  int length = 0;
  std::uint64_t steps = 0;
  double ms = 0;
};

class BenchRunner {
 public:
  BenchRunner(std::string algo, std::optional<Permutation> plain,
              std::optional<BivincularPattern> bivincular)
      : algo_(std::move(algo)), plain_(std::move(plain)), bivincular_(std::move(bivincular)) {}

  Outcome run(const Instance& in) {
    Outcome out;
    SolveStats stats;
    const auto start = Clock::now();
    if (algo_ == "linear") {
      out.decision = matches_both_avoiding(*plain_, *in.text, &stats).has_value();
    } else if (algo_ == "factor") {
      out.decision = matches_pattern_avoiding(*plain_, *in.text, &stats).has_value();
    } else if (algo_ == "bivincular") {
      out.decision = bivincular_matcher_.match(*bivincular_, *in.text, &stats).has_value();
    } else if (algo_ == "longest") {
      out.length = longest_av_subsequence(*in.text, &stats).size();
    } else {
      out.length = lcs_solver_.solve(*in.text, *in.second, &stats).length;
    }
    out.ms = ms_since(start);
    out.steps = stats.steps;
    return out;
  }

 private:
  std::string algo_;
  std::optional<Permutation> plain_;
  std::optional<BivincularPattern> bivincular_;
  BivincularMatcher bivincular_matcher_;
  LcsSolver lcs_solver_;
};

std::vector<Outcome> run_all(const BenchOptions& o, const std::optional<Permutation>& plain,
                             const std::optional<BivincularPattern>& biv,
                             const std::vector<Instance>& instances) {
  std::vector<Outcome> results(instances.size());
  const int workers =
      std::max(1, std::min(o.parallel, static_cast<int>(instances.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(static_cast<std::size_t>(workers));
  auto work = [&](int id) {
    BenchRunner runner(o.algo, plain, biv);
    try {
      for (std::size_t i = next++; i < instances.size(); i = next++) {
        results[i] = runner.run(instances[i]);
      }
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(id)] = e.what();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw Error(ErrorCode::InvalidArgument, e);
  }
  return results;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  static const std::vector<std::string> kAlgos{"linear", "factor", "bivincular", "longest",
                                               "lcs"};
  if (std::find(kAlgos.begin(), kAlgos.end(), o.algo) == kAlgos.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown --algo " + o.algo);
  }
  if (o.count < 1) throw Error(ErrorCode::InvalidArgument, "--count must be >= 1");
  const bool needs_pattern = o.algo == "linear" || o.algo == "factor" || o.algo == "bivincular";

  std::optional<Permutation> plain;
  std::optional<BivincularPattern> biv;
  if (needs_pattern) {
    if (o.algo == "bivincular") {
      biv = o.pattern.empty() ? BivincularPattern(random_av(o.pattern_length, o.seed))
                              : parse_bivincular(o.pattern);
      validate(*biv);
    } else {
      plain = o.pattern.empty() ? random_av(o.pattern_length, o.seed)
                                : Permutation::parse(o.pattern);
    }
  }
  const std::string pattern_str =
      plain ? plain->to_string() : (biv ? biv->to_string() : std::string());

  // One group per size, or a single group for --batch.
  std::vector<std::pair<std::string, std::vector<Instance>>> groups;
  if (!o.batch.empty()) {
    std::ifstream in(o.batch);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open batch file " + o.batch);
    std::vector<Instance> instances;
    std::string line;
    std::optional<Permutation> pending;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Permutation p = Permutation::parse(line);
      if (o.algo == "lcs") {
        if (!pending) {
          pending = std::move(p);
        } else {
          instances.push_back(Instance{std::move(pending), std::move(p)});
          pending.reset();
        }
      } else {
        instances.push_back(Instance{std::move(p), std::nullopt});
      }
    }
    if (pending) throw Error(ErrorCode::InvalidArgument, "lcs batch needs an even line count");
    groups.emplace_back(o.batch, std::move(instances));
  } else {
    for (int n : o.sizes) {
      if (n < 1) throw Error(ErrorCode::InvalidArgument, "sizes must be >= 1");
      std::vector<Instance> instances;
      for (int c = 0; c < o.count; ++c) {
        const std::uint64_t s = o.seed * 1000003ULL + static_cast<std::uint64_t>(n) * 7919ULL +
                                static_cast<std::uint64_t>(c);
        Instance inst;
        inst.text = o.algo == "linear" ? random_av(n, s) : random_permutation(n, s);
        if (o.algo == "lcs") inst.second = random_permutation(n, s ^ 0x9e3779b97f4a7c15ULL);
        instances.push_back(std::move(inst));
      }
      groups.emplace_back(std::to_string(n), std::move(instances));
    }
  }

  for (const auto& [label, instances] : groups) {
    const std::vector<Outcome> results = run_all(o, plain, biv, instances);
    std::uint64_t steps = 0;
    double ms = 0;
    int decisions = 0;
    std::vector<int> lengths;
    for (const auto& r : results) {
      steps += r.steps;
      ms += r.ms;
      decisions += r.decision ? 1 : 0;
      lengths.push_back(r.length);
    }
    const double count = static_cast<double>(std::max<std::size_t>(results.size(), 1));
    RunReport r;
    r.command = "bench";
    r.inputs = {{"algo", o.algo},
                {o.batch.empty() ? "n" : "batch", label},
                {"instances", instances.size()}};
    if (!pattern_str.empty()) r.inputs.emplace_back("pattern", pattern_str);
    r.algorithm = o.algo;
    if (needs_pattern) {
      r.details.emplace_back("matches", decisions);
    } else {
      r.details.emplace_back("lengths", lengths);
    }
    r.details.emplace_back("mean_steps", static_cast<double>(steps) / count);
    r.steps = steps;
    r.elapsed_ms = ms / count;
    emit(r, o.output, out);
  }
  return kOk;
}

}  // namespace

json RunReport::to_json() const {
  json j;
  j["command"] = command;
  json in = json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = std::move(in);
  j["algorithm"] = algorithm;
  if (decision) j["decision"] = *decision;
  if (length) j["length"] = *length;
  if (embedding) j["embedding"] = embedding_json(*embedding);
  for (const auto& [k, v] : details) j[k] = v;
  j["steps"] = steps;
  j["elapsed_ms"] = elapsed_ms ? json(*elapsed_ms) : json(nullptr);
  return j;
}

std::string RunReport::to_text() const {
  auto plain = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::ostringstream s;
  s << "command: " << command << '\n';
  for (const auto& [k, v] : inputs) s << k << ": " << plain(v) << '\n';
  s << "algorithm: " << algorithm << '\n';
  if (decision) s << "decision: " << (*decision ? "match" : "no match") << '\n';
  if (length) s << "length: " << *length << '\n';
  if (embedding) s << "embedding: " << avperm::to_string(*embedding) << '\n';
  for (const auto& [k, v] : details) s << k << ": " << plain(v) << '\n';
  s << "steps: " << steps << '\n';
  s << "elapsed_ms: ";
  if (elapsed_ms) {
    s << std::fixed << std::setprecision(3) << *elapsed_ms << '\n';
  } else {
    s << "-\n";
  }
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern matching with (213,231)-avoiding permutations", "avperm"};
  app.require_subcommand(1);

  MatchOptions match;
  auto* m = app.add_subcommand("match", "Decide whether a text contains a pattern");
  m->add_option("--pattern", match.pattern,
                "Plain permutation or bivincular pattern (\"bottom=...; ...\")")
      ->required();
  m->add_option("--text", match.text, "Text permutation, e.g. \"3 9 1 8 6 7 4 5 2\"")->required();
  m->add_flag("--oracle", match.oracle, "Use the brute-force reference instead");
  m->add_flag("--standardize", match.standardize,
              "Relabel distinct integers to 1..n instead of rejecting gaps");
  match.output.attach(m);

  LongestOptions longest;
  auto* l = app.add_subcommand("longest", "Longest (213,231)-avoiding subsequence");
  l->add_option("text", longest.text, "Text permutation")->required();
  l->add_flag("--oracle", longest.oracle, "Use the brute-force reference instead");
  l->add_flag("--standardize", longest.standardize, "Relabel distinct integers to 1..n");
  longest.output.attach(l);

  LcsOptions lcs;
  auto* c = app.add_subcommand("lcs", "Longest common (213,231)-avoiding subsequence");
  c->add_option("first", lcs.first, "First permutation")->required();
  c->add_option("second", lcs.second, "Second permutation")->required();
  c->add_flag("--oracle", lcs.oracle, "Use the brute-force reference instead");
  c->add_flag("--standardize", lcs.standardize, "Relabel distinct integers to 1..n");
  lcs.output.attach(c);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Uniform random members of Av_n(213,231)");
  g->add_option("n", gen.n, "Length")->required();
  g->add_option("--seed", gen.seed, "Seed of the first permutation");
  g->add_option("--count", gen.count, "How many (seeds seed, seed+1, ...)");
  gen.output.attach(g);

  EnumOptions en;
  auto* e = app.add_subcommand("enum", "Count (and optionally list) Av_n(213,231)");
  e->add_option("n", en.n, "Length")->required();
  e->add_flag("--list", en.list, "Also print every member");
  en.output.attach(e);

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Size sweep with wall time and step counts");
  b->add_option("--algo", bench.algo, "linear | factor | bivincular | longest | lcs");
  b->add_option("--sizes", bench.sizes, "Text sizes")->delimiter(',');
  b->add_option("--pattern-length", bench.pattern_length, "Random pattern length");
  b->add_option("--pattern", bench.pattern, "Fixed pattern instead of a random one");
  b->add_option("--seed", bench.seed, "Seed");
  b->add_option("--count", bench.count, "Instances per size");
  b->add_option("--batch", bench.batch, "File with one text permutation per line");
  b->add_option("--parallel", bench.parallel, "Worker threads");
  bench.output.attach(b);

  ShowOptions show;
  auto* s = app.add_subcommand("show", "ASCII dot grid of a permutation");
  s->add_option("perm", show.perm, "Permutation")->required();
  s->add_flag("--standardize", show.standardize, "Relabel distinct integers to 1..n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return kUsage;
  }

  try {
    if (m->parsed()) return cmd_match(match, out);
    if (l->parsed()) return cmd_longest(longest, out);
    if (c->parsed()) return cmd_lcs(lcs, out);
    if (g->parsed()) return cmd_gen(gen, out);
    if (e->parsed()) return cmd_enum(en, out);
    if (b->parsed()) return cmd_bench(bench, out);
    if (s->parsed()) return cmd_show(show, out);
  } catch (const Error& ex) {
    err << "error (" << to_string(ex.code()) << "): " << ex.what() << '\n';
    if (ex.code() == ErrorCode::ValueOutOfRange) {
      err << "hint: --standardize relabels distinct integers to 1..n\n";
    } else if (ex.code() == ErrorCode::ClassViolation) {
      err << "hint: --oracle accepts any bottom row on small inputs\n";
    }
    return kUsage;
  }
  return kUsage;
}

}  // namespace avperm::cli
