#ifndef SWITCHISO_TOOLS_CLI_HPP_
#define SWITCHISO_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "switchiso/graph.hpp"

namespace switchiso::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitGuard = 2,
  kExitNotEquivalent = 3,
  kExitReproduceFailed = 4,
};

enum class Format { kText, kJson };

struct RunConfig {
  std::string command;
  std::string graph_spec;
  std::vector<std::string> signatures;
  std::optional<int> max_cycle_len;
  Format format = Format::kText;
  int workers = 1;
  std::optional<int> size;       // types
  std::optional<int> max_deg;    // types
  bool corrupt_golden = false;   // reproduce self-test
};

// "complete:6", "petersen", or "@path/to/file".
GraphPtr load_graph(std::string_view spec);

// Runs an already-parsed configuration. Library errors map to exit codes
// (kTooLarge -> 2, everything else -> 1).
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct ReproduceItem {
  std::string item;
  std::string expected;
  std::string got;
  bool pass = false;
};

std::vector<ReproduceItem> reproduce_items(bool corrupt_golden, int workers);

}  // namespace switchiso::cli

#endif  // SWITCHISO_TOOLS_CLI_HPP_
