#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dehn {

// The command-line front end, callable in-process so tests can drive it.
// Exit status: 0 on success, 1 on input errors, 2 on an InconsistencyError.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dehn
