#pragma once

#include <ostream>
#include <string>

#include "fgle/config.hpp"

namespace fgle {

struct CommandOptions {
  std::string out_dir;         // overrides config.output_dir when non-empty
  bool full_reference{false};  // fine reference h = 0.0125, tau = 0.0001
};

/// Runs one subcommand, writes its CSV artifacts, and returns the process
/// exit status: 0 iff every gate of the mode passes.
int run_command(const RunConfig& config, const CommandOptions& opts, std::ostream& log);

}  // namespace fgle
