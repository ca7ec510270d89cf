#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dq::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a mathematical
/// "no" verdict, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dq::cli
