#pragma once

#include <functional>
#include <span>
#include <vector>

namespace projconst {

/// Value of a one- or two-dimensional integral with diagnostics.
struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool reliable = true;

    QuadResult& operator+=(const QuadResult& other);
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule of the given order (cached; safe to call concurrently).
const GaussRule& gauss_legendre_rule(int order);

/// Fixed-order Gauss-Legendre on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order);

struct AdaptiveOptions {
    int low_order = 20;
    int high_order = 40;
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_depth = 48;
    long max_bisections = 20000;
};

/// Continues adaptive refinement on [a, b] given the low- and high-order
/// estimates already computed there. abs_tol is the absolute floor below
/// which a piece is accepted regardless of its relative disagreement.
QuadResult refine_adaptive(const std::function<double(double)>& f, double a, double b,
                           double coarse, double fine, const AdaptiveOptions& options,
                           double abs_tol);

/// Adaptive Gauss-Legendre: compares two orders on each interval and
/// bisects until they agree. Flags the result unreliable if max_depth or the
/// bisection budget is exhausted.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const AdaptiveOptions& options = {});

}  // namespace projconst
