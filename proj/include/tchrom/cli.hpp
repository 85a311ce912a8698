#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tchrom::cli {

/// Runs the command line tool. Exit codes: 0 success, 1 a verification
/// failed, 2 bad usage or bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tchrom::cli
