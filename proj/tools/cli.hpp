#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace priorpol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;   // I/O or data error
inline constexpr int kExitUsage = 2;  // bad flags or arguments

// Runs one command line (args excludes the program name). Tables go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace priorpol::cli
