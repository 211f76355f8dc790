#pragma once

// Command-line front end: compute, table, asymptotic, flatness, verify.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace projconst::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadArguments = 2, kNumericalFailure = 3 };

enum class Format { csv, json, text };

/// Inclusive integer range parsed from "A:B" (or a single integer "A").
struct Range {
    int first = 0;
    int last = 0;
};

Range parse_range(std::string_view text);

/// Locale-independent rendering with 17 significant digits;
/// "NA" for non-finite values.
std::string format_real(double x);

/// Runs the command line; all regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace projconst::cli
