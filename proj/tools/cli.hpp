#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dimlab::cli {

enum class Command { counts, verify, tower, parents, alt, bench };
enum class Format { csv, json, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::counts;
  std::int64_t n = 0;          ///< counts, alt
  std::int64_t max_n = 0;      ///< verify, bench
  std::string partition;       ///< tower, parents
  int r_power = 0;             ///< parents
  std::optional<Format> format;  ///< unset: text for tower, csv otherwise
  std::int64_t oracle_bound = 40;
  unsigned threads = 0;        ///< verify worker pool; 0 = hardware concurrency
  bool header = false;         ///< csv header line for counts and alt
};

/// Executes a parsed configuration. Returns the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage problems print to err and return kExitUsage.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimlab::cli
