#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmatrix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. args[0] is the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmatrix::cli
