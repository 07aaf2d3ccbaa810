#pragma once

#include <iosfwd>

namespace bsq {

/// Runs the bsqdao command line. argv follows main() conventions; outputs land
/// on `out` unless a subcommand was given an output path, diagnostics on
/// `err`. Returns the process exit code: 0 success, 1 data or validation
/// failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsq
