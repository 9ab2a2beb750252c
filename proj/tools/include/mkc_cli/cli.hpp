#ifndef MKC_CLI_CLI_HPP
#define MKC_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mkc::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kRefused = 1,  // not an eigenvector, not certified, budget refusal, ...
    kUsage = 2,
    kInput = 3,
};

/// Entry point of the `mkc` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mkc::cli

#endif  // MKC_CLI_CLI_HPP
