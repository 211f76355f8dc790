#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "projconst/errors.hpp"
#include "projconst/gammakit.hpp"
#include "projconst/jacobi.hpp"

using namespace projconst;
using doctest::Approx;

TEST_CASE("jacobi_eval small cases") {
    CHECK(jacobi_eval({0.3, 1.7, 0}, 0.42) == 1.0);
    CHECK(jacobi_eval({0, 0, 2}, 0.5) == Approx(-0.125).epsilon(1e-15));
    CHECK(jacobi_eval({2, 0, 3}, 1.0) == Approx(10.0).epsilon(1e-14));
    // Degree one on the t-scale: P_1(2t-1) = -(1+beta) + (alpha+beta+2) t.
    for (double a : {0.0, 1.5, 4.0}) {
        for (double b : {0.0, 0.5, 9.0}) {
            for (double t : {0.0, 0.3, 1.0}) {
                CHECK(jacobi_eval({a, b, 1}, 2 * t - 1) == Approx(-(1 + b) + (a + b + 2) * t).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("jacobi params validation") {
    CHECK_THROWS_AS(jacobi_eval({-1.0, 0.0, 2}, 0.0), DomainError);
    CHECK_THROWS_AS(jacobi_eval({0.0, 0.0, -1}, 0.0), DomainError);
    CHECK_THROWS_AS(JacobiParams({0, 0, 30000}).validate(), DomainError);
}

TEST_CASE("endpoint normalization") {
    for (int a = 0; a <= 5; ++a) {
        for (int d = 0; d <= 50; ++d) {
            CHECK(jacobi_eval({double(a), 1.0, d}, 1.0) == Approx(std::exp(log_binomial(d + a, d))).epsilon(1e-10));
        }
    }
}

TEST_CASE("reflection uses the degree as exponent") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            for (int d = 0; d <= 20; ++d) {
                const double t = u(rng);
                const double lhs = jacobi_eval({double(a), double(b), d}, -t);
                const double rhs = (d % 2 ? -1.0 : 1.0) * jacobi_eval({double(b), double(a), d}, t);
                CHECK(lhs == Approx(rhs).epsilon(1e-10).scale(1.0));
            }
        }
    }
}

TEST_CASE("orthogonality") {
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (int i = 0; i <= 8; ++i) {
                for (int j = 0; j < i; ++j) {
                    auto f = [&](double t) {
                        return std::pow(1 - t, a) * std::pow(1 + t, b) * jacobi_eval({double(a), double(b), i}, t) *
                               jacobi_eval({double(a), double(b), j}, t);
                    };
                    CHECK(std::abs(gauss_legendre(f, -1, 1, 40)) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("Rodrigues oracle") {
    CHECK(jacobi_eval_rodrigues({0, 0, 0}, 0.3) == 1.0);
    CHECK(jacobi_eval_rodrigues({0, 1, 1}, 0.0) == Approx(-0.5).epsilon(1e-15));
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (int d = 0; d <= 6; ++d) {
                for (int k = 0; k <= 20; ++k) {
                    const double t = -1 + 0.1 * k;
                    const JacobiParams params{double(a), double(b), d};
                    CHECK(jacobi_eval(params, t) == Approx(jacobi_eval_rodrigues(params, t)).epsilon(1e-11).scale(1.0));
                }
            }
        }
    }
    CHECK_THROWS_AS(jacobi_eval_rodrigues({0.5, 0, 2}, 0.0), UnsupportedParameter);
    CHECK_THROWS_AS(jacobi_eval_rodrigues({0, 0, 13}, 0.0), UnsupportedParameter);
}

TEST_CASE("Szego addition formula") {
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 4; ++b) {
            for (int d = 0; d <= 15; ++d) {
                for (double x : {-0.9, 0.0, 0.7}) {
                    double lhs = 0.0;
                    for (int v = 0; v <= d; ++v) {
                        lhs += (2.0 * v + a + b + 1) * gamma_ratio(v + a + b + 1.0, v + b + 1.0) *
                               jacobi_eval({double(a), double(b), v}, x);
                    }
                    const double rhs = gamma_ratio(d + a + b + 2.0, d + b + 1.0) * jacobi_eval({a + 1.0, double(b), d}, x);
                    CHECK(lhs == Approx(rhs).epsilon(1e-8).scale(1.0));
                }
            }
        }
    }
}

TEST_CASE("derivative matches a difference quotient") {
    const JacobiRecurrence poly({1.5, 3.0, 9});
    for (double s : {-0.8, -0.1, 0.35, 0.9}) {
        const double h = 1e-6;
        CHECK(poly.derivative(s) == Approx((poly(s + h) - poly(s - h)) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("roots") {
    const SignedSegments none = jacobi_roots({2, 3, 0});
    CHECK(none.breakpoints.empty());
    REQUIRE(none.segment_signs.size() == 1);
    CHECK(none.segment_signs[0] == 1);

    const SignedSegments leg = jacobi_roots({0, 0, 2});
    REQUIRE(leg.breakpoints.size() == 2);
    CHECK(leg.breakpoints[0] == Approx(-1 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(leg.breakpoints[1] == Approx(1 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(leg.segment_signs == std::vector<int>{1, -1, 1});

    for (int p : {1, 2, 10, 1000}) {
        const SignedSegments one = jacobi_roots({0, double(p - 1), 1});
        REQUIRE(one.breakpoints.size() == 1);
        CHECK((one.breakpoints[0] + 1) / 2 == Approx(double(p) / (p + 1)).epsilon(1e-13));
    }
}

TEST_CASE("root structure at high degree") {
    for (int d : {50, 777, 4000}) {
        for (double b : {0.0, 3.5, 100.0}) {
            const JacobiParams params{1.0, b, d};
            const SignedSegments seg = jacobi_roots(params);
            REQUIRE(static_cast<int>(seg.breakpoints.size()) == d);
            for (std::size_t i = 0; i < seg.breakpoints.size(); ++i) {
                CHECK(seg.breakpoints[i] > -1.0);
                CHECK(seg.breakpoints[i] < 1.0);
                if (i) CHECK(seg.breakpoints[i] > seg.breakpoints[i - 1]);
                CHECK(seg.segment_signs[i] == -seg.segment_signs[i + 1]);
            }
            CHECK(seg.segment_signs.back() == 1);  // P_d(1) > 0
        }
    }
}

TEST_CASE("weighted_abs_l1 exact cases") {
    for (double a : {0.0, 1.0, 2.5}) {
        for (double b : {0.0, 0.5, 3.0}) {
            const double beta = std::exp((a + b + 1) * std::numbers::ln2 + log_gamma(a + 1) + log_gamma(b + 1) -
                                         log_gamma(a + b + 2));
            CHECK(weighted_abs_l1({0, 0, 0}, a, b).value == Approx(beta).epsilon(1e-12));
        }
    }
    CHECK(weighted_abs_l1({0, 0, 1}, 0, 0).value == Approx(1.0).epsilon(1e-14));
    const QuadResult r = weighted_abs_l1({0, 2, 1}, 0, 1);
    CHECK(r.reliable);
    CHECK(r.abs_error_estimate >= 0.0);
}

TEST_CASE("scaled integral stays finite for huge b") {
    const QuadResult r = weighted_abs_l1_scaled({0, 20000, 1}, 0, 10000);
    CHECK(std::isfinite(r.value));
    CHECK(r.value > 0.0);
    CHECK(r.reliable);
}

TEST_CASE("absolute integral dominates the signed one") {
    for (int d : {0, 1, 4, 11}) {
        for (double b : {0.0, 0.5, 2.0}) {
            const JacobiParams params{1.0, 2 * b, d};
            CHECK(weighted_abs_l1(params, 1.0, b).value >= std::abs(weighted_signed_integral(params, 1.0, b).value) - 1e-12);
        }
    }
    // Orthogonality against P_0 makes the signed integral vanish.
    CHECK(std::abs(weighted_signed_integral({2, 1, 5}, 2, 1).value) < 1e-12);
}
