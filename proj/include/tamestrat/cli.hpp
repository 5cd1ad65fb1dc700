#ifndef TAMESTRAT_CLI_HPP
#define TAMESTRAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tamestrat::cli {

// exit codes: 0 all requested checks pass, 1 computation error or failed
// check, 2 usage error. Output is deterministic for a fixed argv and seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tamestrat::cli

#endif
