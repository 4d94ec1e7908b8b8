#ifndef MGH_TOOLS_CLI_HPP
#define MGH_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mgh::cli {

/// Exit codes: 0 success, 1 computed negative verdict (a relation fails,
/// a certificate is inconclusive, a limit is refused), 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgh::cli

#endif
