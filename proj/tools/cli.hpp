#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kltan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Results go to out; diagnostics, timing and
// human-readable errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kltan::cli
