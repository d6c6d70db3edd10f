#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bibdopt::cli {

enum ExitCode : int { ok = 0, validation = 2, scale_cap = 3, suite_failure = 4 };

/// Runs the bibdopt command line with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "0,1,2", "0..5" and mixtures such as "0..2,5".
std::vector<unsigned long> parse_levels(const std::string& text);

}  // namespace bibdopt::cli
