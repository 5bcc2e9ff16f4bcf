#ifndef POWMAT_CLI_HPP
#define POWMAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace powmat {

inline constexpr int kSchemaVersion = 1;

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 on domain errors, 2 on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powmat

#endif  // POWMAT_CLI_HPP
