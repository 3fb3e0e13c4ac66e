#ifndef TORICFLOER_CLI_HPP
#define TORICFLOER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace toricfloer {

/// Command dispatch for the toric-floer tool. Returns the process exit
/// code: 0 success, 1 usage/parse error, 2 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace toricfloer

#endif
