#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wfriend {

enum ExitCode : int {
  kExitOk = 0,
  kExitContradiction = 1,
  kExitInputError = 2,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` (or to --output), diagnostics to `err`.
///
///   decompositions
///   statements <file> [--bypass-gate]
///   hidden-qubit (--gamma X | --sweep N)
///   lhv
///
/// Global flags: --format human|machine|csv, --output <path>.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wfriend
