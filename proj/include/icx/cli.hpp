#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace icx {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 failed verification or runtime error,
/// 2 bad arguments. Errors are written to `err` as a JSON object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icx
