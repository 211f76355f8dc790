#include "projconst/gauss_legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "projconst/errors.hpp"

namespace projconst {

QuadResult& QuadResult::operator+=(const QuadResult& other) {
    value += other.value;
    abs_error_estimate += other.abs_error_estimate;
    evaluations += other.evaluations;
    reliable = reliable && other.reliable;
    return *this;
}

namespace {

GaussRule build_rule(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton on P_order starting from the Chebyshev-like guess.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            derivative = order * (z * p1 - p2) / (z * z - 1.0);
            const double step = p1 / derivative;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre_rule(int order) {
    if (order < 1) throw DomainError("gauss_legendre_rule: order must be positive");
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    // std::map never relocates nodes, so the reference outlives the lock.
    return it->second;
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre_rule(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

namespace {

struct AdaptiveState {
    const std::function<double(double)>& f;
    const AdaptiveOptions& options;
    double abs_tol;
    long budget;  // remaining bisections
};

QuadResult adapt(AdaptiveState& state, double a, double b, double coarse, double fine, int depth) {
    const auto& opt = state.options;
    if (!std::isfinite(fine) || !std::isfinite(coarse)) {
        throw NumericalError("adaptive quadrature: non-finite integrand value");
    }
    QuadResult result;
    const double diff = std::abs(fine - coarse);
    if (diff <= std::max(opt.rel_tol * std::abs(fine), state.abs_tol)) {
        result.value = fine;
        // The high-order value is far more accurate than the low/high gap.
        result.abs_error_estimate = diff * 1e-2;
        return result;
    }
    if (depth >= opt.max_depth || state.budget <= 0 ||
        b - a <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b))) {
        result.value = fine;
        result.abs_error_estimate = diff;
        result.reliable = false;
        return result;
    }
    --state.budget;
    const double mid = 0.5 * (a + b);
    const double lc = gauss_legendre(state.f, a, mid, opt.low_order);
    const double lf = gauss_legendre(state.f, a, mid, opt.high_order);
    const double rc = gauss_legendre(state.f, mid, b, opt.low_order);
    const double rf = gauss_legendre(state.f, mid, b, opt.high_order);
    result.evaluations = 2L * (opt.low_order + opt.high_order);
    result += adapt(state, a, mid, lc, lf, depth + 1);
    result += adapt(state, mid, b, rc, rf, depth + 1);
    return result;
}

}  // namespace

QuadResult refine_adaptive(const std::function<double(double)>& f, double a, double b,
                           double coarse, double fine, const AdaptiveOptions& options,
                           double abs_tol) {
    AdaptiveState state{f, options, std::max(abs_tol, options.abs_tol), options.max_bisections};
    return adapt(state, a, b, coarse, fine, 0);
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const AdaptiveOptions& options) {
    if (a == b) return {};
    const double coarse = gauss_legendre(f, a, b, options.low_order);
    const double fine = gauss_legendre(f, a, b, options.high_order);
    // Pieces that are negligible relative to the whole need not meet the
    // relative tolerance on their own.
    const double floor = std::max(options.abs_tol, options.rel_tol * 1e-3 * std::abs(fine));
    QuadResult r = refine_adaptive(f, a, b, coarse, fine, options, floor);
    r.evaluations += options.low_order + options.high_order;
    return r;
}

}  // namespace projconst
