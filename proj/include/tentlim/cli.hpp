#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace tentlim {

// Runs the CLI on already-split arguments (argv[1..]) and returns the process
// exit code: 0 ok, 1 verification failed, 2 usage error, 3 precision exhausted.
int tentlim_run(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace tentlim
