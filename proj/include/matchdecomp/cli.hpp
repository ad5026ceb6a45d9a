#ifndef MATCHDECOMP_CLI_HPP
#define MATCHDECOMP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace matchdecomp {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitConstraint = 3,
    kExitValidation = 4,
};

/// Entry point behind the `matchdecomp` executable. `args` excludes the
/// program name. Documents go to `out` (or --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace matchdecomp

#endif
