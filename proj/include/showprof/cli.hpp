#pragma once

#include <string>
#include <vector>

namespace showprof {

// Runs the full command-line interface in-process. `args` excludes the
// program name. Returns the process exit code: 0 success, 1 data error,
// 2 usage error.
int run_cli(std::vector<std::string> args);

}  // namespace showprof
