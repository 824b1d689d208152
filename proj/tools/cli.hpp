// Entry point of the coxdef command-line tool, callable in-process for tests.

#ifndef COXDEF_TOOLS_CLI_HPP_
#define COXDEF_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace coxdef::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxdef::cli

#endif  // COXDEF_TOOLS_CLI_HPP_
