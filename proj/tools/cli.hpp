#pragma once

namespace specnet::cli {

/// Parses argv, runs one subcommand and returns the process exit code:
/// 0 on success, 1 for usage, parse and validation errors, 2 for runtime errors.
int run_cli(int argc, const char* const* argv);

}  // namespace specnet::cli
