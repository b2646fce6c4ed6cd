#pragma once

namespace subdiv {

/// Entry point of the command-line tool; returns the process exit code.
/// Subcommands: refine, diagnose, experiment. The SUBDIV_OUT_DIR environment
/// variable overrides the output directory.
int run_cli(int argc, const char* const* argv);

}  // namespace subdiv
