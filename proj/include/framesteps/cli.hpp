#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framesteps {

// Dispatches one CLI invocation (argv without the program name) and writes
// all output to the given streams. Returns 0 on success, 1 when validation
// or a data-level precondition fails, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace framesteps
