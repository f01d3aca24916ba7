#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symsphere {

// Runs the command-line front end on an argument list (without the program
// name) and writes reports to the given streams.  Returns the process exit
// code: 0 on success, 2 on usage or input errors, 3 on numerical failure.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symsphere
