#pragma once

#include <ostream>
#include <span>
#include <string>

namespace gfvs {

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`. Returns 0 for YES or a valid solution, 1 for
/// NO or an invalid one, 2 for usage errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gfvs
