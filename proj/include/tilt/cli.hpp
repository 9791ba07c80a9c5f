#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilt::cli {

/// Runs one CLI invocation. `args` excludes the program name. All report and
/// error output goes to `out`; `err` receives nothing in normal operation.
/// Returns the process exit code: 0 for a completed computation (whatever
/// the mathematical verdict), 2 for input or validation errors (a
/// machine-readable error object is emitted).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilt::cli
