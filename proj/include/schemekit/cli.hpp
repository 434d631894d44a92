#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schemekit {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kInputError = 2 };

/// Runs one subcommand; `args` excludes the program name.
///   validate FILE
///   analyze FILE [--y0 K]
///   construct (wreath|product|sum) FILE1 FILE2 -o OUT
///   closure FILE --point K -o OUT
///   terwilliger FILE --x0 K
///   verify FILE_X FILE_Y --x0 K --y0 K [--tol T] [--format json|text] [-o OUT] [--timing]
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schemekit
