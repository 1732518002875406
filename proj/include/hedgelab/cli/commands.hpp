#pragma once

#include "hedgelab/cli/model_document.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hedgelab {

struct CommandRequest {
  std::string command;     ///< e.g. "check-aip", "topology", "maxingale"
  std::string subcommand;  ///< topology/maxingale/experiment operation
  std::string model_path;
  std::optional<std::string> time;
  std::optional<std::string> claim;
  std::size_t budget = 4096;
  std::string floor = "1";
  std::optional<std::string> price;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  std::optional<std::string> sequence;
  std::optional<std::string> limit;
  std::optional<std::string> process;
  unsigned depth = 2;
  unsigned levels = 3;
  std::uint64_t seed = 0;
};

/// Runs one command and returns its report {command, verdict, certificates,
/// timing, tool_version, seed}. Throws InputError on bad input.
Json run_command(const CommandRequest& request);

/// Indented plain-text view of a report.
std::string render_human(const Json& report);

/// Seed from HEDGELAB_SEED, 0 when unset. Throws InputError when malformed.
std::uint64_t seed_from_environment();

/// Full command-line entry point. Returns the process exit code: 0 when a
/// verdict was computed, 2 on input errors, 3 on internal failures.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hedgelab
