#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace locnil::cli {

enum class Command { classify, verify, conj, oracle, props };

struct RunConfig {
  Command command = Command::classify;
  unsigned q = 2;
  std::string field = "gf:3";
  /// H (monomial), G (primitive), singer (abelian)
  std::string family = "H";
  std::string alpha;  // empty: family default
  std::string b;      // comma-separated coefficients
  std::string a;
  std::string kind = "Ia";          // conj / oracle conjugator: Ia | H | db | G
  std::string mode = "maximality";  // oracle: maximality | exhaustive | conjugator
  std::size_t limit = 25;
  std::string format = "json";
  std::string output = "-";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool timing = false;
  bool verify = true;
  bool certificates = true;
  std::uint64_t maximality_cap = 100000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDiscrepancy = 2;

/// Parses the command line; on failure (or --help) returns the exit code in `exit_code`
/// and false, having printed to `err` (or the help text to `out`).
bool parse_args(int argc, const char* const* argv, RunConfig& config, int& exit_code, std::ostream& out,
                std::ostream& err);

/// Executes a validated configuration, writing the report to config.output
/// ("-" means `out`). Returns 0, 1 (usage or domain error) or 2 (an oracle
/// disagrees with a criterion).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Worker count: LOCNILP_THREADS if set, else the hardware concurrency.
unsigned default_threads();

}  // namespace locnil::cli
