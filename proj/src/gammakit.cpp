#include "projconst/gammakit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "projconst/errors.hpp"

namespace projconst {

LogValue LogValue::from_double(double x) {
    if (x == 0.0) return zero();
    return {x > 0 ? 1 : -1, std::log(std::abs(x))};
}

double LogValue::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_magnitude);
}

LogValue& LogValue::operator*=(const LogValue& other) {
    sign *= other.sign;
    if (sign == 0) {
        log_magnitude = -std::numeric_limits<double>::infinity();
    } else {
        log_magnitude += other.log_magnitude;
    }
    return *this;
}

LogValue& LogValue::operator/=(const LogValue& other) {
    if (other.sign == 0) throw DomainError("LogValue: division by zero");
    sign *= other.sign;
    if (sign != 0) log_magnitude -= other.log_magnitude;
    return *this;
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    }
    // lgamma_r does not touch the global signgam, so this stays safe to call
    // from several threads.
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

LogValue gamma_ratio_log(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("gamma_ratio: arguments must be positive");
    return LogValue::from_log(log_gamma(a) - log_gamma(b));
}

double gamma_ratio(double a, double b) {
    const double v = gamma_ratio_log(a, b).value();
    if (std::isinf(v)) throw std::overflow_error("gamma_ratio: ratio exceeds double range");
    return v;
}

double log_binomial(double n, double k) {
    if (k < 0.0 || n < k) throw DomainError("log_binomial: need n >= k >= 0");
    return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double log_beta_c(double u, double v) {
    // The defining integral converges for u, v > -1.
    if (!(u > -1.0) || !(v > -1.0)) throw DomainError("beta_c: arguments must exceed -1");
    return log_gamma((u + 1.0) / 2.0) + log_gamma((v + 1.0) / 2.0) - log_gamma((u + v + 2.0) / 2.0);
}

double beta_c(double u, double v) { return std::exp(log_beta_c(u, v)); }

}  // namespace projconst
