#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace qdirac::cli {

/// Result of a command: exit code, report text (stdout or --out) and diagnostics (stderr).
struct CommandResult {
    int exit_code = kPass;
    std::string report;
    std::string diagnostics;
};

CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_commutator(const RunConfig& config);
CommandResult cmd_symbol(const RunConfig& config);

/// Validates the config, dispatches, and maps library errors to exit codes.
CommandResult run_command(const std::string& command, const RunConfig& config);

}  // namespace qdirac::cli
