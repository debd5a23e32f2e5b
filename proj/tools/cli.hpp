#ifndef PM_TOOLS_CLI_HPP
#define PM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not a tautology, disagreement, bad proof
inline constexpr int kUsage = 2;     // usage or input error

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pm::cli

#endif  // PM_TOOLS_CLI_HPP
