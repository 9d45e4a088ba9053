#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "bredim/verify.hpp"

namespace bredim::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kInputError = 2,
    kOutOfRange = 3,
    kUsage = 64,
};

/// Runs one command. `args` excludes the program name. A file argument of
/// "-" (or an omitted single file) reads `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

/// Malformed inputs and out-of-range requests, driven through run(), must
/// fail with their documented exit codes and error classes.
verify::CriterionResult negative_controls();

} // namespace bredim::cli
