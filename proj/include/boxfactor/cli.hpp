#pragma once

#include "boxfactor/simple_factor.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace boxfactor {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitParse = 3,
    kExitDomain = 4,
};

/// Runs the `boxfactor` tool. args[0] is the program name; "-" as an input
/// file reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Text rendering used by `factor`: one "# prime i" LGR block per prime,
/// then "# coords" and the coordinate table.
std::string format_factorization(const Factorization& f);
std::string format_factorization_json(const Factorization& f, const std::string& algorithm);

} // namespace boxfactor
