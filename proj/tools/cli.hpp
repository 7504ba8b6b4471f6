#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specvar::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage error,
/// 2 domain error (with a machine-readable error object on stdout).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specvar::cli
