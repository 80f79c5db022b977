#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parayam {

// Runs the command-line driver on the given arguments (without the program
// name) and writes to the supplied streams. Returns the process exit code:
// 0 for success (including hypothesis-not-satisfied warnings), 1 for a
// failed check, 2 for usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace parayam
