#pragma once

// The invariant suites of every module, run as one report.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace projconst {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckRecord> checks;

    /// True iff no check failed.
    bool pass() const;
    std::size_t count(CheckStatus status) const;
};

struct VerifyOptions {
    bool quick = false;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1'000'000;  // Monte Carlo samples per space
    /// Negative control: flips the sign of c_1 in the coefficient form of
    /// L^diamond before the coefficient/Jacobi agreement check.
    bool inject_legendre_sign_fault = false;
};

VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace projconst
