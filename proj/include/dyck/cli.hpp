#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dyck/format.hpp"

namespace dyck::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io = 1;
inline constexpr int usage = 2;
inline constexpr int verification = 3;
inline constexpr int bench_bound = 4;
}  // namespace exit_code

enum class Command { gen, count, tree, labels, verify, bench };

struct RunConfig {
  Command command = Command::gen;
  int n = 0;
  Format format = Format::bits;
  std::optional<std::string> output;  // standard output when empty

  int tree_cap = 18;
  int oracle_cap = 14;

  bool dot = false;

  // gen
  std::optional<std::uint64_t> limit;
  std::optional<std::string> save_state;
  std::optional<std::string> resume;

  // bench
  int range_lo = 0;
  int range_hi = 0;
  double bound = 12.0;
  bool timing = true;
};

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tree(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_labels(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command, opening config.output when set.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point: parses argv and runs the command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dyck::cli
