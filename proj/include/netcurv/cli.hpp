#pragma once

#include <string>
#include <vector>

namespace netcurv {

/// Command-line entry point. Returns a process exit code; errors are
/// reported on stderr.
int run_cli(int argc, const char* const* argv);

/// Convenience overload for in-process invocation; args exclude the
/// program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace netcurv
