#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aef/rational.hpp"

namespace aef::cli {

/// Process exit codes, one per outcome category.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kAnsweredNo = 3,
  kResourceLimit = 4,
};

struct CheckOptions {
  std::filesystem::path instance;
  std::filesystem::path allocation;
  std::optional<Rational> alpha;
  std::optional<Rational> eps;
  std::optional<std::filesystem::path> output;
};

struct SolveOptions {
  std::filesystem::path instance;
  std::string algorithm = "picking";
  bool quota_from_file = false;
  std::optional<std::filesystem::path> output;
  std::size_t max_states = 1'000'000;
  std::size_t max_matrices = 1'000'000;
  std::uint64_t max_allocations = 10'000'000;
};

struct GenOptions {
  std::string gadget;
  std::string input;
  /// n, m, value model, seed.
  std::vector<std::string> random;
  std::size_t agents = 3;
  std::optional<std::filesystem::path> output;
};

/// Writes the allocation with a verdict block. Without --alpha/--eps the
/// requested check is AEF-1; with them, the requested checks are exactly the
/// given thresholds.
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

/// Runs one solver and re-verifies its output before writing it.
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aef::cli
