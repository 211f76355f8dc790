// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (no arguments: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "projconst/flatness.hpp"
#include "projconst/gammakit.hpp"
#include "projconst/gram_oracle.hpp"
#include "projconst/jacobi.hpp"
#include "projconst/projection.hpp"
#include "projconst/quadrature.hpp"

using namespace projconst;
using cplx = std::complex<double>;

namespace {

constexpr SpaceKind kKinds[] = {SpaceKind::harmonic, SpaceKind::bihomogeneous};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) notes.push_back("first failure: " + what);
            pass = false;
        }
    }
};

std::string fmt(const char* f, double a) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Outcome criterion1() {
    Outcome o;
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const double h = rel(lambda_harmonic(n, 1, 1).value, 2.0 * (n + 1) * std::pow(1.0 - 1.0 / n, n));
        const double b = rel(lambda_bihom(n, 1, 1).value, 2.0 * (n + 1) * std::pow(1.0 - 1.0 / (n + 1), n) - 1);
        worst = std::max({worst, h, b});
        o.require(h <= 1e-9 && b <= 1e-9, "n=" + std::to_string(n));
    }
    o.summary = fmt("(1,1) closed forms, n=2..8, max rel err %.2e", worst);
    return o;
}

Outcome criterion2() {
    Outcome o;
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
        for (int p = 0; p <= 50; ++p) {
            const double want = gamma_ratio(n + p, 1.0 + p) * gamma_ratio(1 + p / 2.0, n + p / 2.0);
            const double e = rel(lambda_harmonic(n, p, 0).value, want);
            worst = std::max(worst, e);
            o.require(e <= 1e-9, "n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
    }
    o.require(rel(lambda_harmonic(2, 1, 0).value, 4.0 / 3.0) <= 1e-9, "spot (2,1)");
    o.require(rel(lambda_harmonic(2, 2, 0).value, 1.5) <= 1e-9, "spot (2,2)");
    o.summary = fmt("q=0 line vs Ryll-Wojtaszczyk, n<=5, p<=50, max rel err %.2e", worst);
    return o;
}

Outcome criterion3() {
    Outcome o;
    double worst = 0.0;
    for (int p = 2; p <= 200; ++p) {
        const double h = rel(lambda_harmonic(2, p, 1).value, lambda_closed(closed::HarmonicP1Dim2{p}));
        const double b = rel(lambda_bihom(2, p, 1).value, lambda_closed(closed::BihomP1Dim2{p}));
        worst = std::max({worst, h, b});
        o.require(h <= 1e-9 && b <= 1e-9, "p=" + std::to_string(p));
    }
    const double h = lambda_harmonic(2, 10000, 1).value, b = lambda_bihom(2, 10000, 1).value;
    const double dh = std::abs(h - (8 / std::sqrt(std::numbers::e) - 2)), db = std::abs(b - 8 / std::numbers::e);
    o.require(dh <= 1e-3, "harmonic limit at p=1e4");
    o.require(db <= 1e-3, "bihom limit at p=1e4");
    o.notes.push_back(fmt("p=1e4: harmonic %.10f", h) + fmt(" (|diff| %.2e)", dh) + fmt(", bihom %.10f", b) +
                      fmt(" (|diff| %.2e)", db));
    o.summary = fmt("n=2 q=1 closed forms p=2..200, max rel err %.2e; limits at p=1e4", worst);
    return o;
}

Outcome criterion4() {
    Outcome o;
    const std::vector<int> ps{100, 400, 1600, 6400};
    const double tol[] = {0.10, 0.05, 0.025, 0.015};
    double worst = 0.0;
    for (SpaceKind kind : kKinds) {
        for (int n : {2, 3}) {
            const double constant = asymptotic_constant(kind, n), limit = asymptotic_limit(kind, n);
            std::vector<double> last;
            for (int d : {0, 3}) {
                const auto rows = asymptotic_study(kind, n, d, ps);
                std::string line = std::string(to_string(kind)) + " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                   ": ratio/constant";
                std::string line2 = "ratio/(2*constant)";
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const double e = std::abs(rows[i].ratio / constant - 1);
                    worst = std::max(worst, e / tol[i]);
                    o.require(e <= tol[i], std::string(to_string(kind)) + " n=" + std::to_string(n) + " d=" +
                                               std::to_string(d) + " p=" + std::to_string(rows[i].p));
                    line += fmt(" %.5f", rows[i].ratio / constant);
                    line2 += fmt(" %.5f", rows[i].ratio / limit);
                }
                o.notes.push_back(line + " | " + line2);
                last.push_back(rows.back().ratio);
            }
            if (kind == SpaceKind::bihomogeneous) {
                const double spread = std::abs(last[0] - last[1]) / constant;
                o.require(spread <= 0.015, "bihom d-independence n=" + std::to_string(n));
                o.notes.push_back(fmt("bihom n=%.0f: |ratio(d=0)-ratio(d=3)|/constant at p=6400", n) +
                                  fmt(" = %.2e", spread));
            }
        }
    }
    o.summary = fmt("lambda/p^{n-3/2} vs asymptotic_constant, worst error/tolerance %.2f", worst);
    return o;
}

Outcome criterion5() {
    Outcome o;
    double worst_det = 0.0, worst_z = 0.0;
    int spaces = 0;
    for (SpaceKind kind : kKinds) {
        for (int n = 2; n <= 3; ++n) {
            for (int p = 0; p <= 3; ++p) {
                for (int q = 0; q <= 3; ++q) {
                    const SpaceId s{n, p, q, kind};
                    const RadialKernel k = kernel(s);
                    auto g = [&](cplx w) { return std::abs(k.at(w)); };
                    const double jac = projection_constant(s).value;
                    const double disk = disk_reduce(g, n, {theta_points_for(p, q), 1e-12}).value;
                    const QuadResult mc = mc_first_coordinate(n, {1'000'000, 2024}, g);
                    const double det = rel(disk, jac);
                    const double se = mc.abs_error_estimate + 1e-12;
                    const double z = std::max(std::abs(mc.value - jac), std::abs(mc.value - disk)) / se;
                    worst_det = std::max(worst_det, det);
                    worst_z = std::max(worst_z, z);
                    o.require(det <= 1e-7 && z <= 4.0, s.label());
                    ++spaces;
                }
            }
        }
    }
    o.summary = "oracle triangle on " + std::to_string(spaces) + " spaces" + fmt(", jacobi/disk rel %.2e", worst_det) +
                fmt(", MC max %.2f SE", worst_z);
    return o;
}

Outcome criterion6() {
    Outcome o;
    double worst_k = 0.0, worst_n = 0.0;
    for (SpaceKind kind : kKinds) {
        for (int n = 2; n <= 3; ++n) {
            for (int p = 0; p <= 3; ++p) {
                for (int q = 0; q <= 3; ++q) {
                    const SpaceId s{n, p, q, kind};
                    const GramKernel g = gram_kernel_expansion(s);
                    const RadialKernel k = kernel(s);
                    for (int i = 0; i < 15; ++i) {
                        const cplx w = std::polar(i / 14.0, 0.7 + 2.1 * i);
                        const double e = std::abs(g.at_first_coordinate(w) - k.at(w));
                        worst_k = std::max(worst_k, e);
                        o.require(e <= 1e-10, s.label() + " kernel");
                    }
                    const double norm = disk_reduce_radial([&](double r) { return std::pow(k.profile(r), 2); }, n).value;
                    const double e = rel(norm, double(dim(s)));
                    worst_n = std::max(worst_n, e);
                    o.require(e <= 1e-8, s.label() + " normalization");
                }
            }
        }
    }
    o.summary = fmt("gram vs analytic kernel max abs err %.2e", worst_k) + fmt(", int |k|^2 = dim rel err %.2e", worst_n);
    return o;
}

Outcome criterion7() {
    Outcome o;
    double margin_ks = 1e300, margin_ub = 1e300;
    for (SpaceKind kind : kKinds) {
        for (int n = 2; n <= 4; ++n) {
            for (int p = 0; p <= 8; ++p) {
                for (int q = 0; q <= 8; ++q) {
                    const SpaceId s{n, p, q, kind};
                    const double l = projection_constant(s).value;
                    const double mks = kadets_snobar_bound(s) - l, mub = upper_bound(kind, n, p, q) - l;
                    margin_ks = std::min(margin_ks, mks);
                    margin_ub = std::min(margin_ub, mub);
                    o.require(mks >= -1e-8 && mub >= -1e-8, s.label());
                }
            }
        }
        for (int n = 2; n <= 4; ++n) {
            const BandReport r = q1_band_check(kind, n, {1000});
            o.require(r.pass, "band " + std::string(to_string(kind)) + " n=" + std::to_string(n));
            o.notes.push_back(std::string(to_string(kind)) + " n=" + std::to_string(n) +
                              fmt(": lambda(p=1000,q=1) = %.6f", r.rows[0].lambda) + fmt(" in [%.0f,", r.lower) +
                              fmt(" %.0f]", r.upper));
        }
    }
    o.summary = fmt("min margin Kadets-Snobar %.3e", margin_ks) + fmt(", upper bound %.3e; q=1 bands at p=1000", margin_ub);
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (SpaceId s : {SpaceId{2, 1, 0, SpaceKind::harmonic}, SpaceId{2, 1, 1, SpaceKind::harmonic},
                      SpaceId{2, 1, 1, SpaceKind::bihomogeneous}}) {
        const FlatCertificate c = flatness_certificate(s);
        o.require(std::abs(c.sup_norm - 1.0) <= 1e-6, s.label() + " sup");
        o.require(c.l2_norm >= c.bound, s.label() + " l2 >= bound");
        o.require(c.max_supporting_ratio <= 1.0 + 1e-12, s.label() + " supporting inequality");
        o.notes.push_back(s.label() + fmt(": l2 %.6f", c.l2_norm) + fmt(" >= %.6f", c.bound) +
                          fmt(", max sup/(sqrt(dim) l2) %.6f", c.max_supporting_ratio) + " over " +
                          std::to_string(c.functions_tested) + " functions");
    }
    o.summary = "flat polynomials found for H_{1,0}(S_2), H_{1,1}(S_2), P_{1,1}(S_2)";
    return o;
}

Outcome criterion9() {
    Outcome o;
    double orth = 0.0, endp = 0.0, refl = 0.0, rod = 0.0, sz = 0.0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int i = 0; i <= 8; ++i)
                for (int j = 0; j < i; ++j) {
                    auto f = [&](double t) {
                        return std::pow(1 - t, a) * std::pow(1 + t, b) * jacobi_eval({double(a), double(b), i}, t) *
                               jacobi_eval({double(a), double(b), j}, t);
                    };
                    orth = std::max(orth, std::abs(gauss_legendre(f, -1, 1, 40)));
                }
    for (int a = 0; a <= 5; ++a)
        for (int d = 0; d <= 50; ++d)
            endp = std::max(endp, rel(jacobi_eval({double(a), 2.0, d}, 1.0), std::exp(log_binomial(d + a, d))));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int d = 0; d <= 20; ++d) {
                const double t = u(rng);
                const double x = jacobi_eval({double(a), double(b), d}, -t);
                const double y = (d % 2 ? -1 : 1) * jacobi_eval({double(b), double(a), d}, t);
                refl = std::max(refl, std::abs(x - y) / std::max(1.0, std::abs(y)));
            }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int d = 0; d <= 6; ++d)
                for (int k = 0; k <= 20; ++k) {
                    const double t = -1 + 0.1 * k;
                    const double y = jacobi_eval_rodrigues({double(a), double(b), d}, t);
                    rod = std::max(rod, std::abs(jacobi_eval({double(a), double(b), d}, t) - y) / std::max(1.0, std::abs(y)));
                }
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int d = 0; d <= 15; ++d)
                for (double x : {-0.9, 0.0, 0.7}) {
                    double lhs = 0.0;
                    for (int v = 0; v <= d; ++v)
                        lhs += (2.0 * v + a + b + 1) * gamma_ratio(v + a + b + 1.0, v + b + 1.0) *
                               jacobi_eval({double(a), double(b), v}, x);
                    const double rhs = gamma_ratio(d + a + b + 2.0, d + b + 1.0) * jacobi_eval({a + 1.0, double(b), d}, x);
                    sz = std::max(sz, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
                }
    o.require(orth <= 1e-9, "orthogonality");
    o.require(endp <= 1e-10, "endpoint normalization");
    o.require(refl <= 1e-10, "reflection");
    o.require(rod <= 1e-11, "Rodrigues");
    o.require(sz <= 1e-8, "addition formula");
    o.summary = fmt("orthogonality %.1e", orth) + fmt(", endpoint %.1e", endp) + fmt(", reflection %.1e", refl) +
                fmt(", Rodrigues %.1e", rod) + fmt(", addition formula %.1e", sz);
    return o;
}

struct Criterion {
    int id;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{{1, 1, criterion1},   {2, 5, criterion2},   {3, 30, criterion3},
                                     {4, 600, criterion4}, {5, 300, criterion5}, {6, 120, criterion6},
                                     {7, 120, criterion7}, {8, 120, criterion8}, {9, 60, criterion9}};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : all) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (seconds > c.budget_seconds) {
            o.pass = false;
            o.notes.push_back(fmt("runtime budget exceeded: %.1f s", seconds) + fmt(" > %.0f s", c.budget_seconds));
        }
        std::printf("%s criterion %d: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, o.summary.c_str(), seconds);
        for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
