#pragma once

#include <iosfwd>

#include "kummer/verify.hpp"

namespace kummer::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitVerificationFailed = 3,
};

// Entry point for the kummer-gaps tool. `subjects` lets tests run the verify
// subcommand against deliberately broken implementations.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, const VerifySubjects& subjects = {});

}  // namespace kummer::cli
