#pragma once

#include "cli/run_config.hpp"

#include <iosfwd>

namespace casimir::cli
{

/// Parses argv (program name first), resolves the config and dispatches.
/// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Throws UsageError (exit 2) on malformed command lines.
RunConfig parse_command_line(int argc, const char* const* argv);

int cmd_force(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_isotope_diff(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_crossover(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace casimir::cli
