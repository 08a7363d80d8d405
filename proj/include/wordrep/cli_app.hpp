#ifndef WORDREP_CLI_APP_HPP
#define WORDREP_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wordrep {

// Runs the command-line tool on the given arguments (without argv[0]).
// Exit codes: 0 success, 1 usage/input error, 2 a produced word failed its
// own representation certificate (implementation bug).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wordrep

#endif
