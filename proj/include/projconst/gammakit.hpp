#pragma once

// Gamma-family arithmetic in log space. Every factorial ratio in the
// projection-constant formulas goes through here so that degrees up to
// 10^4 stay finite.

#include <cmath>
#include <limits>

namespace projconst {

/// A real number stored as sign * exp(log_magnitude).
struct LogValue {
    int sign = 0;
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static LogValue zero() { return {}; }
    static LogValue one() { return {1, 0.0}; }
    static LogValue from_log(double log_magnitude, int sign = 1) { return {sign, log_magnitude}; }
    static LogValue from_double(double x);

    /// Plain real; +-inf if the magnitude is beyond double range, 0 on underflow.
    double value() const;

    LogValue& operator*=(const LogValue& other);
    LogValue& operator/=(const LogValue& other);
    friend LogValue operator*(LogValue a, const LogValue& b) { return a *= b; }
    friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
};

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Gamma(a) / Gamma(b) as a LogValue (never overflows).
LogValue gamma_ratio_log(double a, double b);

/// Gamma(a) / Gamma(b). Throws std::overflow_error if the ratio itself
/// is not representable.
double gamma_ratio(double a, double b);

/// ln binom(n, k) for real n >= k >= 0 via log-gamma.
double log_binomial(double n, double k);

/// C(u, v) = B((u+1)/2, (v+1)/2) = 2 * int_0^{pi/2} sin^u t cos^v t dt.
double beta_c(double u, double v);
double log_beta_c(double u, double v);

}  // namespace projconst
