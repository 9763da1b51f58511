#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msf7::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;
constexpr int kNegative = 3;  // NO verdict, Unknown or NonMultisymplectic, failed checks
constexpr int kUndecided = 4; // UNKNOWN verdict

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msf7::cli
