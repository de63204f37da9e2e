#ifndef LND_CLI_HPP
#define LND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lnd {

// Runs the command line given as argv (without the program name).
// Exit codes: 0 success / verified, 1 verification failed, 2 bad input,
// 3 step budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lnd

#endif
