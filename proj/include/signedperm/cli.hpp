#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace signedperm::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Output depends only
/// on the arguments. Returns 0 on success or a true verdict, 1 on a false
/// verdict or failed verification, 2 on a usage error (one line on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace signedperm::cli
