#pragma once

#include <string>
#include <vector>

namespace statmc::cli {

/// Entry point behind the statmc binary. Returns the process exit code:
/// 0 success, 2 invalid arguments, 3 runtime simulation error.
int run(int argc, const char* const* argv);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args);

/// Line-oriented key=value file; '#' starts a comment. Keys are CLI flag
/// names without the leading dashes. Returns synthesized "--key" "value"
/// argument pairs. Throws std::invalid_argument naming the offending
/// line on a malformed file.
std::vector<std::string> parse_config_file(const std::string& path);

}  // namespace statmc::cli
