#ifndef BRAIDNORM_CLI_HPP
#define BRAIDNORM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace braidnorm::cli {

/// Dispatches one invocation. args excludes the program name.
/// Exit codes: 0 success; 1 domain error (bad word, bad flag, failed
/// precondition); 2 verification failure (invalid certificate, defect
/// violation). All numeric output is exact: integers, or rationals as "p/q".
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace braidnorm::cli

#endif
