#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "carlitz/rank.hpp"

namespace carlitz::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitUsage = 1,
  kExitUnstable = 2,
  kExitVerifyFailed = 3,
};

/// Global flags shared by every subcommand.
struct CliConfig {
  std::uint32_t p = 2;
  std::uint32_t nu = 1;
  /// json, csv or text.
  std::string format = "text";
  /// Empty means standard output.
  std::string out;
  std::uint64_t seed = 1;
  RankMode rank_mode = RankMode::kExact;
  unsigned jobs = 1;
};

/// Parses `args` (without the program name) and runs the subcommand. The
/// report goes to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carlitz::cli
