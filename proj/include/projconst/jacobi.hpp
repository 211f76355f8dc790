#pragma once

// Jacobi polynomials P_d^{(alpha,beta)} on [-1, 1], normalized so that
// P_d(1) = binom(d + alpha, d).

#include <vector>

#include "projconst/gauss_legendre.hpp"

namespace projconst {

inline constexpr int kDefaultMaxDegree = 20000;

struct JacobiParams {
    double alpha = 0.0;
    double beta = 0.0;
    int degree = 0;

    /// Throws DomainError unless alpha, beta > -1 and 0 <= degree <= max_degree.
    void validate(int max_degree = kDefaultMaxDegree) const;
};

/// Three-term recurrence with the coefficients tabulated once, for
/// repeated evaluation of the same polynomial.
class JacobiRecurrence {
public:
    explicit JacobiRecurrence(const JacobiParams& params);

    const JacobiParams& params() const { return params_; }
    double operator()(double s) const;

    /// P_d(s) together with P_{d-1}(s) (the latter 0 when d = 0).
    std::pair<double, double> last_two(double s) const;

    /// dP_d/ds for |s| < 1.
    double derivative(double s) const;

private:
    JacobiParams params_;
    std::vector<double> slope_;      // A_m
    std::vector<double> intercept_;  // B_m
    std::vector<double> lag_;        // C_m
};

double jacobi_eval(const JacobiParams& params, double s);

/// Independent oracle: expands the Rodrigues formula exactly in rational
/// arithmetic. Integer alpha, beta >= 0 and degree <= 12 only.
double jacobi_eval_rodrigues(const JacobiParams& params, double s);

/// Roots of P_d and the sign of P_d on each of the d+1 open segments.
struct SignedSegments {
    std::vector<double> breakpoints;
    std::vector<int> segment_signs;
};

SignedSegments jacobi_roots(const JacobiParams& params);

/// int_{-1}^{1} (1-s)^a (1+s)^b |P_d(s)| ds, split at the roots so that each
/// piece is smooth.
QuadResult weighted_abs_l1(const JacobiParams& params, double a, double b);

/// The same integral with the weight rescaled to ((1-s)/2)^a ((1+s)/2)^b,
/// i.e. 2^{-(a+b)} weighted_abs_l1. Stays finite for very large b.
QuadResult weighted_abs_l1_scaled(const JacobiParams& params, double a, double b);

/// Signed counterpart: int_{-1}^{1} (1-s)^a (1+s)^b P_d(s) ds.
QuadResult weighted_signed_integral(const JacobiParams& params, double a, double b);

}  // namespace projconst
