#pragma once

#include <iosfwd>
#include <string_view>

namespace tcent::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsageError = 1, kDataError = 2 };

/// Runs one `tcent` invocation. Data goes to files named by --out, or to
/// `out` when no file is given; the reproducibility header and diagnostics
/// go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tcent::cli
