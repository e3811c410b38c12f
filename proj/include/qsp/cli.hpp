#ifndef QSP_CLI_HPP
#define QSP_CLI_HPP

#include <iosfwd>

namespace qsp {

// Runs the command-line front end. Returns 0 on success, 1 when a
// verification subcommand reports failures, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qsp

#endif
