#ifndef FGA_CLI_HPP
#define FGA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fga::cli {

// Runs one CLI invocation. Returns the process exit status:
//   0  success
//   1  domain error (non-member, invalid CRS, resource cap, ...)
//   2  parse or configuration error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fga::cli

#endif
