#ifndef ARCHSLICER_SUBPROCESS_HPP
#define ARCHSLICER_SUBPROCESS_HPP

#include <string>
#include <vector>

namespace archslicer {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // captured stdout
    std::string error;   // captured stderr
};

// Runs a program with fork/exec (no shell), capturing stdout and stderr.
// Throws std::runtime_error only when the process cannot be spawned at all.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace archslicer

#endif
