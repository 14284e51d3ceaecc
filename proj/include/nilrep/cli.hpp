#pragma once

#include <string>
#include <vector>

namespace nilrep {

// Runs the command-line front end; args exclude the program name.
// Returns 0 on success, 1 on computation errors, 2 on usage errors.
int cli_main(const std::vector<std::string>& args);

}  // namespace nilrep
