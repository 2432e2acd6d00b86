#ifndef ORTHOGLIDE_TOOLS_CLI_HPP
#define ORTHOGLIDE_TOOLS_CLI_HPP

#include <string>
#include <vector>

namespace orthoglide::tools {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // verify failed, runtime error
inline constexpr int kExitUsage = 2;        // bad flags or malformed argument
inline constexpr int kExitRequirement = 3;  // degenerate/unsupported psi_max
inline constexpr int kExitOutOfReach = 4;   // analyze point not reachable
inline constexpr int kExitEmptyLocus = 5;   // singularity box came up empty

int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without argv[0]

}  // namespace orthoglide::tools

#endif  // ORTHOGLIDE_TOOLS_CLI_HPP
