#pragma once

// The command-line surface. Pure: output depends only on the arguments and
// the bytes of the files they name.
//
// Exit codes: 0 success, 1 an axiom check failed (witnesses are printed),
// 2 usage, parse or mismatch errors, 3 internal errors.

#include <string>
#include <vector>

namespace bolsuper {

struct CommandResult {
    int exitCode = 0;
    std::string out;
    std::string err;
};

// args excludes the program name.
CommandResult runCommand(const std::vector<std::string>& args);

}  // namespace bolsuper
