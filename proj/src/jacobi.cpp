#include "projconst/jacobi.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "projconst/errors.hpp"

namespace projconst {

void JacobiParams::validate(int max_degree) const {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw DomainError("Jacobi parameters must satisfy alpha, beta > -1");
    }
    if (degree < 0 || degree > max_degree) {
        throw DomainError("Jacobi degree " + std::to_string(degree) + " outside [0, " +
                          std::to_string(max_degree) + "]");
    }
}

JacobiRecurrence::JacobiRecurrence(const JacobiParams& params) : params_(params) {
    params_.validate(std::numeric_limits<int>::max());
    const double a = params.alpha;
    const double b = params.beta;
    const int d = params.degree;
    slope_.assign(d + 1, 0.0);
    intercept_.assign(d + 1, 0.0);
    lag_.assign(d + 1, 0.0);
    if (d >= 1) {
        // P_1(s) = (alpha + 1) + (alpha + beta + 2)(s - 1)/2
        slope_[1] = 0.5 * (a + b + 2.0);
        intercept_[1] = 0.5 * (a - b);
    }
    for (int m = 2; m <= d; ++m) {
        const double k = 2.0 * m + a + b;
        const double denom = 2.0 * m * (m + a + b) * (k - 2.0);
        slope_[m] = (k - 1.0) * k * (k - 2.0) / denom;
        intercept_[m] = (k - 1.0) * (a * a - b * b) / denom;
        lag_[m] = 2.0 * (m + a - 1.0) * (m + b - 1.0) * k / denom;
    }
}

std::pair<double, double> JacobiRecurrence::last_two(double s) const {
    const int d = params_.degree;
    if (d == 0) return {1.0, 0.0};
    double prev = 1.0;
    double cur = slope_[1] * s + intercept_[1];
    for (int m = 2; m <= d; ++m) {
        const double next = (slope_[m] * s + intercept_[m]) * cur - lag_[m] * prev;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

double JacobiRecurrence::operator()(double s) const { return last_two(s).first; }

double JacobiRecurrence::derivative(double s) const {
    const int d = params_.degree;
    if (d == 0) return 0.0;
    const double a = params_.alpha;
    const double b = params_.beta;
    const auto [pd, pd1] = last_two(s);
    // (2d+a+b)(1-s^2) P_d' = d[(a-b) - (2d+a+b)s] P_d + 2(d+a)(d+b) P_{d-1}
    const double k = 2.0 * d + a + b;
    return (d * ((a - b) - k * s) * pd + 2.0 * (d + a) * (d + b) * pd1) / (k * (1.0 - s) * (1.0 + s));
}

double jacobi_eval(const JacobiParams& params, double s) {
    params.validate();
    if (!(std::abs(s) <= 1.0)) throw DomainError("jacobi_eval: |s| must be <= 1");
    return JacobiRecurrence(params)(s);
}

double jacobi_eval_rodrigues(const JacobiParams& params, double s) {
    const bool integral = params.alpha == std::floor(params.alpha) && params.beta == std::floor(params.beta);
    if (!integral || params.alpha < 0 || params.beta < 0 || params.degree < 0 || params.degree > 12) {
        throw UnsupportedParameter("jacobi_eval_rodrigues: needs integer alpha, beta >= 0 and degree <= 12");
    }
    const long alpha = static_cast<long>(params.alpha);
    const long beta = static_cast<long>(params.beta);
    const long d = params.degree;
    const long big_a = alpha + d;
    const long big_b = beta + d;

    auto falling = [](long top, long count) {
        mpz_class r = 1;
        for (long i = 0; i < count; ++i) r *= top - i;
        return r;
    };
    auto binom = [](long n, long k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    };

    // d-fold product rule on (1-t)^A (1+t)^B, then division by the weight:
    //   sum_k C(d,k) (-1)^k A!/(A-k)! B!/(beta+k)! (1-t)^{d-k} (1+t)^k
    std::vector<mpq_class> poly(d + 1, mpq_class(0));
    for (long k = 0; k <= d; ++k) {
        mpz_class term = binom(d, k) * falling(big_a, k) * falling(big_b, d - k);
        if (k % 2 == 1) term = -term;
        // (1-t)^{d-k} (1+t)^k expanded into monomials t^i.
        for (long i = 0; i <= d - k; ++i) {
            mpz_class left = binom(d - k, i);
            if (i % 2 == 1) left = -left;
            for (long j = 0; j <= k; ++j) {
                poly[i + j] += mpq_class(term * left * binom(k, j));
            }
        }
    }
    mpz_class scale = 1;
    for (long i = 0; i < d; ++i) scale *= 2;
    scale *= falling(d, d);
    mpq_class factor(d % 2 == 0 ? mpz_class(1) : mpz_class(-1), scale);
    factor.canonicalize();

    const mpq_class t(s);
    mpq_class acc = 0;
    for (long i = d; i >= 0; --i) acc = acc * t + poly[i];
    acc *= factor;
    return acc.get_d();
}

SignedSegments jacobi_roots(const JacobiParams& params) {
    params.validate();
    const int d = params.degree;
    SignedSegments out;
    if (d == 0) {
        out.segment_signs = {1};
        return out;
    }
    const JacobiRecurrence poly(params);

    std::vector<double> roots;
    // Cosine-spaced grid: roots cluster towards +-1 like Chebyshev points.
    for (int grid = 8 * (d + 1); grid <= 64 * (d + 1); grid *= 2) {
        roots.clear();
        double x_prev = -1.0;
        double f_prev = poly(x_prev);
        for (int k = 1; k <= grid; ++k) {
            const double x = -std::cos(std::numbers::pi * k / grid);
            const double f = poly(x);
            if (f == 0.0 && k < grid) {
                roots.push_back(x);
            } else if ((f_prev < 0.0 && f > 0.0) || (f_prev > 0.0 && f < 0.0)) {
                // Safeguarded Newton inside the bracket [lo, hi].
                double lo = x_prev;
                double hi = x;
                const bool rising = f > 0.0;
                double r = 0.5 * (lo + hi);
                for (int iter = 0; iter < 200; ++iter) {
                    const double fr = poly(r);
                    if (fr == 0.0) break;
                    if ((fr > 0.0) == rising) hi = r; else lo = r;
                    double next = r - fr / poly.derivative(r);
                    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
                    const double step = std::abs(next - r);
                    r = next;
                    if (step <= 1e-15 * std::max(1.0, std::abs(r)) || hi - lo <= 1e-15) break;
                }
                roots.push_back(r);
            }
            x_prev = x;
            f_prev = f;
        }
        if (static_cast<int>(roots.size()) == d) break;
    }
    if (static_cast<int>(roots.size()) != d) {
        throw NumericalError("jacobi_roots: isolated " + std::to_string(roots.size()) + " of " +
                             std::to_string(d) + " roots");
    }
    std::sort(roots.begin(), roots.end());
    out.breakpoints = std::move(roots);
    // P_d(1) > 0, so the last segment is positive and signs alternate leftwards.
    out.segment_signs.resize(d + 1);
    for (int i = 0; i <= d; ++i) out.segment_signs[i] = (d - i) % 2 == 0 ? 1 : -1;
    return out;
}

namespace {

constexpr double kLogUnderflow = -745.0;

/// ((1-s)/2)^a ((1+s)/2)^b from the two distances to the endpoints. Bounded
/// by 1; flushes to zero instead of underflowing.
double endpoint_weight(double one_minus, double one_plus, double a, double b) {
    double log_w = 0.0;
    if (a != 0.0) log_w += a * std::log(0.5 * one_minus);
    if (b != 0.0) log_w += b * std::log(0.5 * one_plus);
    if (log_w < kLogUnderflow) return 0.0;
    return std::exp(log_w);
}

bool is_integer(double x) { return x == std::floor(x); }

QuadResult integrate_pieces(const JacobiParams& params, double a, double b,
                            const std::vector<double>& breakpoints, const std::vector<int>& signs) {
    if (!(a > -1.0) || !(b > -1.0)) throw DomainError("weight exponents must exceed -1");
    const JacobiRecurrence poly(params);

    struct Piece {
        std::function<double(double)> f;
        double lo, hi;
    };
    std::vector<Piece> pieces;

    struct Interval {
        double lo, hi;
        double sign;
    };
    std::vector<Interval> intervals;
    {
        double lo = -1.0;
        for (std::size_t i = 0; i <= breakpoints.size(); ++i) {
            const double hi = i < breakpoints.size() ? breakpoints[i] : 1.0;
            intervals.push_back({lo, hi, static_cast<double>(signs[i])});
            lo = hi;
        }
    }
    const bool sub_left = !is_integer(b);
    const bool sub_right = !is_integer(a);
    // A single segment touching both singular ends is split in the middle.
    if (intervals.size() == 1 && sub_left && sub_right) {
        const double sign = intervals[0].sign;
        intervals = {{-1.0, 0.0, sign}, {0.0, 1.0, sign}};
    }

    for (const Interval& iv : intervals) {
        const double sign = iv.sign;
        if (iv.lo == -1.0 && sub_left) {
            // 1 + s = u^2 makes (1+s)^b smooth for half-integer b.
            pieces.push_back({[&poly, a, b, sign](double u) {
                                  const double one_plus = u * u;
                                  const double s = -1.0 + one_plus;
                                  return sign * 2.0 * u * endpoint_weight(2.0 - one_plus, one_plus, a, b) * poly(s);
                              },
                              0.0, std::sqrt(iv.hi + 1.0)});
        } else if (iv.hi == 1.0 && sub_right) {
            // 1 - s = v^2 at the other end.
            pieces.push_back({[&poly, a, b, sign](double v) {
                                  const double one_minus = v * v;
                                  const double s = 1.0 - one_minus;
                                  return sign * 2.0 * v * endpoint_weight(one_minus, 2.0 - one_minus, a, b) * poly(s);
                              },
                              0.0, std::sqrt(1.0 - iv.lo)});
        } else {
            pieces.push_back({[&poly, a, b, sign](double s) {
                                  return sign * endpoint_weight(1.0 - s, 1.0 + s, a, b) * poly(s);
                              },
                              iv.lo, iv.hi});
        }
    }

    // Fixed orders first; only the pieces where they disagree get bisected.
    const AdaptiveOptions options{};
    std::vector<double> coarse(pieces.size());
    std::vector<double> fine(pieces.size());
    double total = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        coarse[i] = gauss_legendre(pieces[i].f, pieces[i].lo, pieces[i].hi, options.low_order);
        fine[i] = gauss_legendre(pieces[i].f, pieces[i].lo, pieces[i].hi, options.high_order);
        total += std::abs(fine[i]);
    }
    const double abs_floor = 1e-15 * total;
    QuadResult result;
    result.evaluations = static_cast<long>(pieces.size()) * (options.low_order + options.high_order);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        result += refine_adaptive(pieces[i].f, pieces[i].lo, pieces[i].hi, coarse[i], fine[i], options, abs_floor);
    }
    return result;
}

QuadResult scale_result(QuadResult r, double a, double b) {
    const double factor = std::exp2(a + b);
    r.value *= factor;
    r.abs_error_estimate *= factor;
    return r;
}

}  // namespace

QuadResult weighted_abs_l1_scaled(const JacobiParams& params, double a, double b) {
    const SignedSegments seg = jacobi_roots(params);
    return integrate_pieces(params, a, b, seg.breakpoints, seg.segment_signs);
}

QuadResult weighted_abs_l1(const JacobiParams& params, double a, double b) {
    return scale_result(weighted_abs_l1_scaled(params, a, b), a, b);
}

QuadResult weighted_signed_integral(const JacobiParams& params, double a, double b) {
    params.validate();
    return scale_result(integrate_pieces(params, a, b, {}, {1}), a, b);
}

}  // namespace projconst
