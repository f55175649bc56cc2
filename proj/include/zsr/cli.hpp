#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zsr::cli {

/// Exit codes: 0 success or witness found, 1 no witness where none is
/// guaranteed, 2 input error, 3 theorem violation (a bug).
enum ExitCode { kOk = 0, kNoWitness = 1, kInputError = 2, kTheoremViolation = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsr::cli
