#ifndef GKZ_CLI_HPP
#define GKZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gkz/error.hpp"

namespace gkz::cli {

enum ExitCode : int { Success = 0, Usage = 1, VerificationFailed = 2, NumericError = 3 };

/// 1 for malformed input, unknown names and invalid configurations, 3 for
/// failures of the numerics.
int exit_code_for(ErrorCode code);

/// args excludes the program name. JSON goes to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace gkz::cli

#endif // GKZ_CLI_HPP
