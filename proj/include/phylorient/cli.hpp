#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phylorient::cli {

enum ExitCode : int { kDecided = 0, kUsage = 1, kSizeGuard = 2, kInvalidInput = 3 };

/// Runs one command line. `args` excludes the program name. `in` backs the `-`
/// file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace phylorient::cli
