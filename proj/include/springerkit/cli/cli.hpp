#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace springerkit::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kCheckFailed = 2,
  kUsage = 64,
};

/// A datum path as given if it exists, otherwise looked up among the bundled
/// fixtures.
std::filesystem::path resolve_datum(const std::string& path);

/// Runs one invocation; argv[0] is the program name. The report goes to `out`
/// only when the command completes; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springerkit::cli
