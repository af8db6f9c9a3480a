#pragma once

#include <iosfwd>

#include "cascade/config.hpp"

namespace cascade {

/// Runs one subcommand. Tables go to `out` (or to the --out path) and a short
/// human-readable summary goes to `log`. Returns the process exit status.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace cascade
