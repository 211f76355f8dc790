#include "projconst/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "projconst/errors.hpp"
#include "projconst/gammakit.hpp"
#include "projconst/quadrature.hpp"

namespace projconst {

std::string_view to_string(LambdaMethod method) {
    switch (method) {
        case LambdaMethod::jacobi_integral: return "jacobi_integral";
        case LambdaMethod::closed_form: return "closed_form";
        case LambdaMethod::monte_carlo: return "monte_carlo";
        case LambdaMethod::gram_oracle: return "gram_oracle";
        case LambdaMethod::disk_reduce: return "disk_reduce";
    }
    return "unknown";
}

namespace {

LambdaResult jacobi_lambda(const SpaceId& space) {
    space.validate();
    LambdaResult out;
    out.space = space;
    out.method = LambdaMethod::jacobi_integral;
    if (space.p == 0 && space.q == 0) {
        out.value = 1.0;
        return out;
    }
    const int n = space.n;
    const int hi = space.max_degree();
    const int lo = space.min_degree();
    const double gap = space.gap();
    const double b = 0.5 * gap;

    // Prefactor on the s = 2t - 1 scale is 2^{-(n-1)-b}; the scaled integral
    // already carries 2^{-(n-2)-b}, leaving a factor 1/2.
    double log_prefactor = -std::numbers::ln2;
    double alpha = 0.0;
    // With min(p,q) = 0 both kinds reduce to the same integral; one code path
    // keeps lambda(P_{p,0}) and lambda(H_{p,0}) bitwise equal.
    if (space.kind == SpaceKind::harmonic && lo > 0) {
        log_prefactor += std::log(static_cast<double>(n + space.p + space.q - 1)) + log_gamma(n + hi - 1.0) -
                         log_gamma(n - 1.0) - log_gamma(1.0 + hi);
        alpha = n - 2;
    } else {
        log_prefactor += log_gamma(n + static_cast<double>(hi)) - log_gamma(n - 1.0) - log_gamma(1.0 + hi);
        alpha = n - 1;
    }
    const QuadResult integral = weighted_abs_l1_scaled(JacobiParams{alpha, gap, lo}, n - 2.0, b);
    const double prefactor = std::exp(log_prefactor);
    out.value = prefactor * integral.value;
    out.abs_error_estimate = prefactor * integral.abs_error_estimate;
    out.reliable = integral.reliable;
    return out;
}

}  // namespace

LambdaResult lambda_harmonic(int n, int p, int q) {
    return jacobi_lambda(SpaceId{n, p, q, SpaceKind::harmonic});
}

LambdaResult lambda_bihom(int n, int p, int q) {
    return jacobi_lambda(SpaceId{n, p, q, SpaceKind::bihomogeneous});
}

LambdaResult projection_constant(const SpaceId& space) { return jacobi_lambda(space); }

double kadets_snobar_bound(const SpaceId& space) { return std::exp(0.5 * log_dim(space)); }

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

struct ClosedEvaluator {
    double operator()(const closed::RwHomogeneous& c) const {
        require(c.n >= 2 && c.p >= 0, "rw_homogeneous: need n >= 2, p >= 0");
        const double n = c.n;
        const double p = c.p;
        return std::exp(log_gamma(n + p) + log_gamma(1.0 + p / 2.0) - log_gamma(1.0 + p) - log_gamma(n + p / 2.0));
    }
    double operator()(const closed::H11& c) const {
        require(c.n >= 2, "h11: need n >= 2");
        const double n = c.n;
        return 2.0 * (n + 1.0) * std::pow(1.0 - 1.0 / n, n);
    }
    double operator()(const closed::P11& c) const {
        require(c.n >= 2, "p11: need n >= 2");
        const double n = c.n;
        return 2.0 * (n + 1.0) * std::pow(1.0 - 1.0 / (n + 1.0), n) - 1.0;
    }
    double operator()(const closed::HarmonicP1Dim2& c) const {
        require(c.p >= 2, "h_p1_n2: need p >= 2");
        const double p = c.p;
        const double power = std::exp((p + 3.0) / 2.0 * std::log1p(-1.0 / (p + 1.0)));  // (p/(p+1))^{(p+3)/2}
        return (p + 2.0) * (8.0 / (p + 3.0) * power + 2.0 / (p + 1.0) - 4.0 / (p + 3.0));
    }
    double operator()(const closed::BihomP1Dim2& c) const {
        require(c.p >= 2, "p_p1_n2: need p >= 2");
        const double p = c.p;
        const double power = std::exp((p + 3.0) / 2.0 * std::log1p(-2.0 / (p + 2.0)));  // (p/(p+2))^{(p+3)/2}
        const double r = (p + 2.0) / ((p + 1.0) * (p + 3.0));
        return (p + 1.0) * (8.0 * r * power + 4.0 / (p + 1.0) - 4.0 * r);
    }
    double operator()(const closed::Rutovitz& c) const {
        require(c.n >= 1, "rutovitz: need n >= 1");
        const double n = c.n;
        return 0.5 * std::sqrt(std::numbers::pi) * std::exp(log_gamma(n + 1.0) - log_gamma(n + 0.5));
    }
};

}  // namespace

double lambda_closed(const ClosedFormCase& c) { return std::visit(ClosedEvaluator{}, c); }

std::vector<ClosedFormCase> closed_forms_for(const SpaceId& space) {
    space.validate();
    std::vector<ClosedFormCase> out;
    const int hi = space.max_degree();
    const int lo = space.min_degree();
    if (lo == 0) {
        // P_{p,0} = H_{p,0} = homogeneous polynomials of degree p.
        out.push_back(closed::RwHomogeneous{space.n, hi});
        if (hi == 1) out.push_back(closed::Rutovitz{space.n});
    }
    if (lo == 1 && hi == 1) {
        if (space.kind == SpaceKind::harmonic) {
            out.push_back(closed::H11{space.n});
        } else {
            out.push_back(closed::P11{space.n});
        }
    }
    if (space.n == 2 && lo == 1 && hi >= 2) {
        if (space.kind == SpaceKind::harmonic) {
            out.push_back(closed::HarmonicP1Dim2{hi});
        } else {
            out.push_back(closed::BihomP1Dim2{hi});
        }
    }
    return out;
}

namespace {

double log_sum_exp(const std::vector<double>& logs) {
    const double top = *std::max_element(logs.begin(), logs.end());
    double sum = 0.0;
    for (double l : logs) sum += std::exp(l - top);
    return top + std::log(sum);
}

}  // namespace

double upper_bound(SpaceKind kind, int n, int p, int q) {
    SpaceId{n, p, q, kind}.validate();
    if (p < q) std::swap(p, q);
    const double half_gap = 0.5 * (p - q);
    std::vector<double> terms;
    for (int m = 0; m <= q; ++m) {
        double t = log_binomial(q, m) + log_gamma(half_gap + 1.0) - log_gamma(n + m + half_gap) - log_gamma(1.0 + p);
        if (kind == SpaceKind::bihomogeneous) {
            t += log_gamma(n + m - 1.0) - log_gamma(n + m) + log_gamma(n + m + static_cast<double>(p));
        } else {
            t += std::log(static_cast<double>(n + p + q - 1)) + log_gamma(n - 1.0 + m + p);
        }
        terms.push_back(t);
    }
    double front = 0.0;
    if (kind == SpaceKind::bihomogeneous) {
        front = -log_gamma(n - 1.0) + log_gamma(n + static_cast<double>(q)) - log_gamma(1.0 + q);
    } else {
        front = log_gamma(n - 1.0 + q) - log_gamma(n - 1.0) - log_gamma(1.0 + q);
    }
    return std::exp(front + log_sum_exp(terms));
}

double upper_bound_limit(SpaceKind kind, int n, int q) {
    SpaceId{n, 0, q, kind}.validate();
    double sum = 0.0;
    for (int m = 0; m <= q; ++m) {
        const double term = std::exp(log_binomial(q, m)) * std::ldexp(1.0, m);
        sum += kind == SpaceKind::bihomogeneous ? term / (n + m - 1.0) : term;
    }
    const double front = kind == SpaceKind::bihomogeneous
                             ? log_gamma(n + static_cast<double>(q)) - log_gamma(1.0 + q) - log_gamma(n - 1.0)
                             : log_gamma(n - 1.0 + q) - log_gamma(1.0 + q) - log_gamma(n - 1.0);
    return std::ldexp(1.0, n - 1) * std::exp(front) * sum;
}

double upper_bound_limit_simple(SpaceKind kind, int n, int q) {
    SpaceId{n, 0, q, kind}.validate();
    const double binom = kind == SpaceKind::bihomogeneous ? std::exp(log_binomial(n - 1 + q, q))
                                                          : std::exp(log_binomial(n - 2 + q, q));
    return std::ldexp(1.0, n - 1) * std::pow(3.0, q) * binom;
}

double asymptotic_constant(SpaceKind kind, int n) {
    if (n < 2) throw DomainError("asymptotic_constant: n must be >= 2");
    const double pi32 = std::pow(std::numbers::pi, 1.5);
    if (kind == SpaceKind::harmonic) {
        return 2.0 * std::exp(log_gamma((2.0 * n - 1.0) / 4.0) + log_gamma(0.75) - log_gamma(n - 1.0) -
                              log_gamma((n + 1.0) / 2.0)) /
               pi32;
    }
    return std::exp(log_gamma((2.0 * n - 3.0) / 4.0) + log_gamma(0.75) - log_gamma(n - 1.0) - log_gamma(n / 2.0)) /
           pi32;
}

double asymptotic_limit(SpaceKind kind, int n) { return 2.0 * asymptotic_constant(kind, n); }

std::vector<AsymptoticRow> asymptotic_study(SpaceKind kind, int n, int d, const std::vector<int>& p_values) {
    for (int p : p_values) {
        if (p < 0 || p + d < 0) throw DomainError("asymptotic_study: need p >= 0 and p + d >= 0");
    }
    std::vector<AsymptoticRow> rows(p_values.size());
    parallel_for(p_values.size(), [&](std::size_t i) {
        const int p = p_values[i];
        const LambdaResult r = jacobi_lambda(SpaceId{n, p, p + d, kind});
        if (!r.reliable) throw NumericalError("asymptotic_study: unreliable quadrature at p = " + std::to_string(p));
        rows[i] = {p, p + d, r.value, p > 0 ? r.value / std::pow(p, n - 1.5) : 0.0};
    });
    return rows;
}

std::pair<double, double> q1_band(SpaceKind kind, int n) {
    const double scale = std::ldexp(1.0, n - 1);
    if (kind == SpaceKind::harmonic) return {(n - 1) * scale, 3.0 * (n - 1) * scale};
    return {(n - 2) * scale, (3.0 * n - 2.0) * scale};
}

BandReport q1_band_check(SpaceKind kind, int n, const std::vector<int>& p_values, double tolerance) {
    BandReport report;
    report.kind = kind;
    report.n = n;
    std::tie(report.lower, report.upper) = q1_band(kind, n);
    report.rows.resize(p_values.size());
    parallel_for(p_values.size(), [&](std::size_t i) {
        const int p = p_values[i];
        const LambdaResult r = jacobi_lambda(SpaceId{n, p, 1, kind});
        BandRow row{p, r.value, p >= kBandMinDegree, true};
        if (row.asserted) {
            row.inside = r.value >= report.lower - tolerance && r.value <= report.upper + tolerance;
        }
        report.rows[i] = row;
    });
    for (const auto& row : report.rows) report.pass = report.pass && row.inside;
    return report;
}

}  // namespace projconst
