#ifndef INVPOW_TOOLS_CLI_HPP
#define INVPOW_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace invpow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNotConverged = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace invpow::cli

#endif
