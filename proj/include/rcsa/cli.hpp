#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcsa {

/// Entry point for the `rcsa` tool. `args` excludes the program name.
/// Payloads go to `out`, diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcsa
