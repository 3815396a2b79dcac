#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace symspec::cli {

/// Bad flags, unreadable inputs or guard violations; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // decompose, linear, spectrum, global, structure, families, maxpf, verify
  std::optional<int> degree;
  std::vector<std::string> specs;
  std::vector<std::string> set_files;
  std::vector<std::string> function_files;
  std::optional<int> d, t, r;
  std::optional<double> delta, R, eps;
  std::uint64_t seed = 0xC0FFEE;
  std::optional<int> threads;  // falls back to $SYMSPEC_THREADS
  std::string format = "json";
  std::string output;          // empty: stdout
  std::string suite = "core";
  std::string mode = "auto";   // maxpf: auto, exact or heuristic
  std::uint64_t budget = 0;    // maxpf: nodes or moves, 0 for the default
  bool timestamp = true;
  bool slow = false;
  bool certify = false;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAssertion = 2;

/// Checks every guard that can be decided before touching the inputs.
void validate(const RunConfig& config);

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::json report;              // without the timestamp
  std::vector<std::string> failures;  // names of violated invariants
};

/// Runs one subcommand. Throws UsageError on bad input; never writes anything.
RunResult execute(const RunConfig& config);

/// Serialized report in the configured format, adding the timestamp unless disabled.
std::string render(const RunConfig& config, const nlohmann::json& report);

/// Lossy CSV projection: one "key,value" row per scalar leaf.
std::string to_csv(const nlohmann::json& report);

/// Validate, execute, render and write. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. --help prints usage and returns 0.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symspec::cli
