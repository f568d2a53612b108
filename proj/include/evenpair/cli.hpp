#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evenpair {

/// Full command-line surface; `args` excludes the program name. Results go
/// to `out` as JSON (or DIMACS text for gen), diagnostics to `err`.
/// Exit codes: 0 success / in class, 1 witness found / verification failed /
/// out-of-class diagnostic, 2 usage errors and oracle size guards.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evenpair
