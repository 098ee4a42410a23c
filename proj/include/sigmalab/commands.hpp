#pragma once

#include <ostream>
#include <string_view>

#include "sigmalab/config.hpp"

namespace sigmalab {

/// Process exit statuses.
enum ExitCode : int { ExitOk = 0, ExitSuiteFailure = 1, ExitConfigError = 2, ExitComputationError = 3 };

/// Each command assumes a validated config and returns an ExitCode.
int cmd_validate(const RunConfig& config, std::ostream& out);
int cmd_rates(const RunConfig& config, std::ostream& out);
int cmd_goldens(const RunConfig& config, std::ostream& out);
int cmd_curve(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Validates, dispatches by name and maps exceptions onto exit statuses.
int run_command(std::string_view name, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sigmalab
