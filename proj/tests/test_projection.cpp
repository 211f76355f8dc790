#include <doctest.h>

#include <cmath>
#include <numbers>

#include "projconst/errors.hpp"
#include "projconst/projection.hpp"

using namespace projconst;
using doctest::Approx;

TEST_CASE("exact (1,1) cases") {
    CHECK(lambda_harmonic(2, 1, 1).value == Approx(1.5).epsilon(1e-12));
    CHECK(lambda_harmonic(3, 1, 1).value == Approx(64.0 / 27.0).epsilon(1e-12));
    CHECK(lambda_bihom(2, 1, 1).value == Approx(5.0 / 3.0).epsilon(1e-12));
    for (int n = 2; n <= 8; ++n) {
        CHECK(lambda_harmonic(n, 1, 1).value == Approx(2.0 * (n + 1) * std::pow(1.0 - 1.0 / n, n)).epsilon(1e-9));
        CHECK(lambda_bihom(n, 1, 1).value == Approx(2.0 * (n + 1) * std::pow(1.0 - 1.0 / (n + 1), n) - 1).epsilon(1e-9));
    }
}

TEST_CASE("constants space") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(lambda_harmonic(n, 0, 0).value == 1.0);
        CHECK(lambda_bihom(n, 0, 0).value == 1.0);
    }
}

TEST_CASE("Ryll-Wojtaszczyk line") {
    CHECK(lambda_harmonic(2, 1, 0).value == Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(lambda_harmonic(2, 2, 0).value == Approx(1.5).epsilon(1e-12));
    for (int n = 2; n <= 5; ++n) {
        for (int p = 0; p <= 50; ++p) {
            const double rw = std::exp(std::lgamma(n + p) + std::lgamma(1 + p / 2.0) - std::lgamma(1 + p) -
                                       std::lgamma(n + p / 2.0));
            CHECK(lambda_harmonic(n, p, 0).value == Approx(rw).epsilon(1e-9));
            CHECK(lambda_bihom(n, p, 0).value == Approx(lambda_harmonic(n, p, 0).value).epsilon(1e-14));
        }
    }
}

TEST_CASE("n = 2, q = 1 closed forms") {
    CHECK(lambda_closed(closed::HarmonicP1Dim2{2}) == Approx(1.7891458301944203).epsilon(1e-14));
    for (int p = 2; p <= 200; ++p) {
        CHECK(lambda_harmonic(2, p, 1).value == Approx(lambda_closed(closed::HarmonicP1Dim2{p})).epsilon(1e-9));
        CHECK(lambda_bihom(2, p, 1).value == Approx(lambda_closed(closed::BihomP1Dim2{p})).epsilon(1e-9));
    }
    CHECK(lambda_closed(closed::HarmonicP1Dim2{100000}) ==
          Approx(8 / std::sqrt(std::numbers::e) - 2).epsilon(1e-3));
    CHECK_THROWS_AS(lambda_closed(closed::HarmonicP1Dim2{1}), DomainError);
}

TEST_CASE("n = 2, q = 1 limits at p = 10^4") {
    const LambdaResult h = lambda_harmonic(2, 10000, 1), b = lambda_bihom(2, 10000, 1);
    CHECK(h.reliable);
    CHECK(std::abs(h.value - (8 / std::sqrt(std::numbers::e) - 2)) < 1e-3);
    CHECK(std::abs(b.value - 8 / std::numbers::e) < 1e-3);
}

TEST_CASE("Rutovitz") {
    CHECK(lambda_closed(closed::Rutovitz{1}) == Approx(1.0).epsilon(1e-15));
    CHECK(lambda_closed(closed::Rutovitz{2}) == Approx(4.0 / 3.0).epsilon(1e-14));
    // l_2^n(C) is H_{1,0}(S_n).
    for (int n = 2; n <= 6; ++n) CHECK(lambda_closed(closed::Rutovitz{n}) == Approx(lambda_harmonic(n, 1, 0).value));
}

TEST_CASE("closed forms are found for the right spaces") {
    CHECK(closed_forms_for({2, 1, 1, SpaceKind::harmonic}).size() >= 1);
    CHECK(closed_forms_for({3, 2, 3, SpaceKind::bihomogeneous}).empty());
    for (SpaceKind kind : {SpaceKind::harmonic, SpaceKind::bihomogeneous}) {
        for (int n = 2; n <= 4; ++n) {
            for (int p = 0; p <= 6; ++p) {
                for (int q = 0; q <= 6; ++q) {
                    const SpaceId s{n, p, q, kind};
                    for (const auto& c : closed_forms_for(s)) {
                        CHECK(projection_constant(s).value == Approx(lambda_closed(c)).epsilon(1e-9));
                    }
                }
            }
        }
    }
}

TEST_CASE("swap symmetry, Kadets-Snobar, lambda >= 1") {
    for (SpaceKind kind : {SpaceKind::harmonic, SpaceKind::bihomogeneous}) {
        for (int n = 2; n <= 5; ++n) {
            for (int p = 0; p <= 10; ++p) {
                for (int q = 0; q <= 10; ++q) {
                    const SpaceId s{n, p, q, kind};
                    const LambdaResult r = projection_constant(s);
                    CHECK(r.value >= 1.0 - 1e-12);
                    CHECK(r.value <= kadets_snobar_bound(s) + 1e-8);
                    if (q < p) CHECK(r.value == Approx(projection_constant(s.swapped()).value).epsilon(1e-10));
                }
            }
        }
    }
}

TEST_CASE("upper bounds dominate, with equality at q = 0") {
    for (SpaceKind kind : {SpaceKind::harmonic, SpaceKind::bihomogeneous}) {
        for (int n = 2; n <= 4; ++n) {
            for (int p = 0; p <= 8; ++p) {
                for (int q = 0; q <= 8; ++q) {
                    const double l = projection_constant({n, p, q, kind}).value;
                    CHECK(upper_bound(kind, n, p, q) >= l - 1e-8);
                    CHECK(upper_bound(kind, n, p, q) == Approx(upper_bound(kind, n, q, p)));
                }
                CHECK(upper_bound(kind, n, p, 0) == Approx(projection_constant({n, p, 0, kind}).value).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("upper bound limits") {
    // For q = 0 the bound tends to 2^{n-1}.
    CHECK(upper_bound(SpaceKind::bihomogeneous, 3, 5000, 0) == Approx(4.0).epsilon(1e-3));
    CHECK(upper_bound_limit(SpaceKind::bihomogeneous, 2, 1) == Approx(8.0));
    CHECK(upper_bound_limit(SpaceKind::harmonic, 2, 1) == Approx(6.0));
    CHECK(upper_bound_limit_simple(SpaceKind::bihomogeneous, 2, 1) == Approx(12.0));
    CHECK(upper_bound_limit_simple(SpaceKind::harmonic, 2, 1) == Approx(6.0));
    for (SpaceKind kind : {SpaceKind::harmonic, SpaceKind::bihomogeneous}) {
        for (int n = 2; n <= 4; ++n) {
            for (int q = 0; q <= 3; ++q) {
                CHECK(upper_bound(kind, n, 20000, q) == Approx(upper_bound_limit(kind, n, q)).epsilon(2e-3));
                CHECK(upper_bound_limit(kind, n, q) <= upper_bound_limit_simple(kind, n, q) * (1 + 1e-12));
            }
        }
    }
}

TEST_CASE("asymptotic constants") {
    CHECK(asymptotic_constant(SpaceKind::harmonic, 2) == Approx(0.6085942388997417).epsilon(1e-13));
    CHECK(asymptotic_constant(SpaceKind::bihomogeneous, 2) == Approx(0.7978845608028654).epsilon(1e-13));
    for (int n = 2; n <= 6; ++n) {
        for (SpaceKind kind : {SpaceKind::harmonic, SpaceKind::bihomogeneous}) {
            CHECK(asymptotic_limit(kind, n) == Approx(2 * asymptotic_constant(kind, n)));
        }
    }
}

TEST_CASE("asymptotic study") {
    const auto one = asymptotic_study(SpaceKind::harmonic, 2, 0, {1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].ratio == Approx(1.5));
    for (SpaceKind kind : {SpaceKind::harmonic, SpaceKind::bihomogeneous}) {
        const double limit = asymptotic_limit(kind, 2);
        for (int d : {0, 5}) {
            const auto rows = asymptotic_study(kind, 2, d, {100, 400, 1600});
            REQUIRE(rows.size() == 3);
            CHECK(rows[0].q == 100 + d);
            CHECK(std::abs(rows[0].ratio / limit - 1) < 0.10);
            CHECK(std::abs(rows[1].ratio / limit - 1) < 0.05);
            CHECK(std::abs(rows[2].ratio / limit - 1) < 0.025);
        }
    }
    CHECK_THROWS(asymptotic_study(SpaceKind::harmonic, 2, -5, {3}));
}

TEST_CASE("q = 1 bands") {
    CHECK(q1_band(SpaceKind::harmonic, 2) == std::pair{2.0, 6.0});
    CHECK(q1_band(SpaceKind::bihomogeneous, 2) == std::pair{0.0, 8.0});
    CHECK(q1_band(SpaceKind::harmonic, 3) == std::pair{8.0, 24.0});
    for (SpaceKind kind : {SpaceKind::harmonic, SpaceKind::bihomogeneous}) {
        for (int n = 2; n <= 4; ++n) {
            const BandReport r = q1_band_check(kind, n, {10, 1000});
            CHECK(r.pass);
            CHECK_FALSE(r.rows[0].asserted);
            CHECK(r.rows[1].asserted);
        }
    }
}

TEST_CASE("invalid spaces") {
    CHECK_THROWS_AS(lambda_harmonic(1, 1, 1), DomainError);
    CHECK_THROWS_AS(lambda_bihom(2, -1, 0), DomainError);
}
