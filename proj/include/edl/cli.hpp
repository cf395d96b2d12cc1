#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 2;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace edl
