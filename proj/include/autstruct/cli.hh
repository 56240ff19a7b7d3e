// cli.hh -- the autstruct command line

#ifndef AUTSTRUCT_CLI_HH
#define AUTSTRUCT_CLI_HH

#include <ostream>
#include <string>
#include <vector>

namespace autstruct::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitNotEqual = 10;

/// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace autstruct::cli

#endif
