#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hermsum::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kUnsupportedField = 3;
inline constexpr int kMismatch = 4;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermsum::cli
