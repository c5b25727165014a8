#ifndef TGEN_TOOLS_CLI_HPP
#define TGEN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tgen::cli
{

enum ExitCode : int
{
    Ok = 0,
    InputError = 1,
    NotRepresentable = 2,
    CheckFailed = 3,
};

/// Runs `tgen <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tgen::cli

#endif
