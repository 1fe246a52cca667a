// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pointbethe/cli/run_config.hpp"

#include <ostream>

namespace pointbethe::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,   ///< malformed configuration or couplings outside the requested family
    kExitResidual = 2, ///< some residual exceeds the tolerance
    kExitPole = 3,     ///< amplitude pole or degenerate boundary matrix
};

/// Runs one command, writing the report (config echo, summary, CSV blocks) to
/// `report`. Library errors propagate.
int run(const RunConfig& config, std::ostream& report);

/// run() with library errors mapped to exit codes and reported on `err`.
int run_guarded(const RunConfig& config, std::ostream& report, std::ostream& err);

/// Command-line front end: flags override values from --config.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pointbethe::cli
