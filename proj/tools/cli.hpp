#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradedring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name.
/// Exit 0 when nothing failed, 1 on any FAIL outcome or counterexample,
/// 2 on usage and spec errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradedring::cli
