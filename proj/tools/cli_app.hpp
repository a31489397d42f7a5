#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscint::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1, // compare tolerance exceeded, selfcheck failure
    kUsage = 2,       // bad arguments or parameters outside a family's domain
    kNumerical = 3,   // series, continued fraction or quadrature did not converge
};

/// Runs the command line with output to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A library operation together with a command line that exercises it.
struct OperationRoute {
    std::string operation;
    std::vector<std::string> args;
};

/// Public operations and the CLI invocation that reaches each one.
const std::vector<OperationRoute>& operation_routes();

} // namespace oscint::cli
