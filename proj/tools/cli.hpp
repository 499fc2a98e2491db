#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "avperm/permutation.hpp"

namespace avperm::cli {

// Exit codes. For match, kOk means a match was found.
inline constexpr int kOk = 0;
inline constexpr int kNoMatch = 1;
inline constexpr int kUsage = 2;

// Result of one command run. Field order in both renderings is fixed.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> inputs;
  std::string algorithm;
  std::optional<bool> decision;
  std::optional<int> length;
  std::optional<Embedding> embedding;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> details;
  std::uint64_t steps = 0;
  std::optional<double> elapsed_ms;  // absent with --no-timing

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// Runs one command line (args excludes the program name). Everything goes to
// the given streams; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avperm::cli
