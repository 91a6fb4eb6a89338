#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nakarep::cli {

enum ExitCode : int { Ok = 0, ValidationFailure = 1, ParseFailure = 2, MathFailure = 3 };

struct CommandInfo {
    std::string name;
    // Library operations the command runs (one, or a fixed composition).
    std::vector<std::string> operations;
    std::string summary;
};

const std::vector<CommandInfo>& command_table();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nakarep::cli
