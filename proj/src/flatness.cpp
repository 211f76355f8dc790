#include "projconst/flatness.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "projconst/errors.hpp"
#include "projconst/projection.hpp"
#include "projconst/quadrature.hpp"

namespace projconst {

namespace {

using cplx = std::complex<double>;

cplx monomial_at(const MultiIndexPair& m, std::span<const cplx> x) {
    cplx v = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int k = 0; k < m.alpha[i]; ++k) v *= x[i];
        for (int k = 0; k < m.beta[i]; ++k) v *= std::conj(x[i]);
    }
    return v;
}

}  // namespace

std::vector<cplx> OrthonormalBasis::evaluate(std::span<const cplx> x) const {
    const std::size_t m = monomials.size();
    std::vector<cplx> mono(m);
    for (std::size_t j = 0; j < m; ++j) mono[j] = monomial_at(monomials[j], x);
    std::vector<cplx> out(size, 0.0);
    for (std::size_t k = 0; k < size; ++k) {
        const double* row = &coefficients[k * m];
        cplx acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += row[j] * mono[j];
        out[k] = acc;
    }
    return out;
}

OrthonormalBasis orthonormal_basis(const SpaceId& space) {
    space.validate();
    if (dim(space) > kFlatnessMaxDimension) {
        throw UnsupportedParameter("orthonormal_basis: dim " + std::to_string(dim(space)) + " exceeds " +
                                   std::to_string(kFlatnessMaxDimension));
    }
    const int n = space.n;
    OrthonormalBasis basis;
    basis.space = space;
    basis.monomials = monomial_basis(n, space.p, space.q);
    const auto m = static_cast<Eigen::Index>(basis.monomials.size());
    if (m > kGramMaxDimension) throw UnsupportedParameter("orthonormal_basis: monomial basis too large");

    const RationalMatrix gram = gram_matrix(n, basis.monomials);
    Eigen::MatrixXd g(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) g(i, j) = gram(i, j).get_d();

    Eigen::LLT<Eigen::MatrixXd> llt(g);
    if (llt.info() != Eigen::Success) throw NumericalError("orthonormal_basis: Gram matrix not positive definite");
    const Eigen::MatrixXd lower = llt.matrixL();
    // phi = T m is orthonormal; m = L phi.
    const Eigen::MatrixXd t = lower.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(m, m));

    Eigen::MatrixXd rows;
    if (space.kind == SpaceKind::harmonic && space.min_degree() > 0) {
        // Orthogonal complement of |z|^2 P_{p-1,q-1} inside P_{p,q}.
        std::map<std::pair<std::vector<int>, std::vector<int>>, Eigen::Index> index;
        for (Eigen::Index j = 0; j < m; ++j) index[{basis.monomials[j].alpha, basis.monomials[j].beta}] = j;
        const auto lower_basis = monomial_basis(n, space.p - 1, space.q - 1);
        const auto m_low = static_cast<Eigen::Index>(lower_basis.size());
        Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, m_low);
        for (Eigen::Index c = 0; c < m_low; ++c) {
            for (int i = 0; i < n; ++i) {
                auto a = lower_basis[c].alpha;
                auto b = lower_basis[c].beta;
                ++a[i];
                ++b[i];
                v(index.at({a, b}), c) += 1.0;
            }
        }
        const Eigen::MatrixXd w = lower.transpose() * v;
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
        const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
        rows = q.rightCols(m - m_low).transpose() * t;
    } else {
        rows = t;
    }

    basis.size = static_cast<std::size_t>(rows.rows());
    if (static_cast<std::int64_t>(basis.size) != dim(space)) {
        throw NumericalError("orthonormal_basis: size mismatch for " + space.label());
    }
    basis.coefficients.resize(basis.size * static_cast<std::size_t>(m));
    for (Eigen::Index k = 0; k < rows.rows(); ++k)
        for (Eigen::Index j = 0; j < m; ++j) basis.coefficients[k * m + j] = rows(k, j);
    return basis;
}

namespace {

struct SampledBasis {
    std::size_t samples = 0;
    std::size_t size = 0;
    std::vector<cplx> values;  // values[k * samples + s] = psi_k(x_s)

    const cplx* column(std::size_t k) const { return &values[k * samples]; }
};

SampledBasis sample_basis(const OrthonormalBasis& basis, const std::vector<cplx>& points, int n) {
    SampledBasis out;
    out.samples = points.size() / n;
    out.size = basis.size;
    out.values.resize(out.size * out.samples);
    for (std::size_t s = 0; s < out.samples; ++s) {
        const auto v = basis.evaluate(std::span<const cplx>(&points[s * n], n));
        for (std::size_t k = 0; k < out.size; ++k) out.values[k * out.samples + s] = v[k];
    }
    return out;
}

double norm2(const std::vector<cplx>& c) {
    double s = 0.0;
    for (const auto& x : c) s += std::norm(x);
    return std::sqrt(s);
}

cplx eval_f(const OrthonormalBasis& basis, const std::vector<cplx>& c, std::span<const cplx> x) {
    const auto v = basis.evaluate(x);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * v[k];
    return acc;
}

/// Hill climbing of |f| on the sphere starting from x.
double polish_max(const OrthonormalBasis& basis, const std::vector<cplx>& c, std::vector<cplx> x,
                  std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    double best = std::abs(eval_f(basis, c, x));
    double h = 0.05;
    int failures = 0;
    std::vector<cplx> y(x.size());
    while (h > 1e-9) {
        double norm = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            y[i] = x[i] + h * cplx(gauss(rng), gauss(rng));
            norm += std::norm(y[i]);
        }
        norm = std::sqrt(norm);
        for (auto& yi : y) yi /= norm;
        const double v = std::abs(eval_f(basis, c, y));
        if (v > best) {
            best = v;
            x = y;
            failures = 0;
        } else if (++failures > 30) {
            h *= 0.5;
            failures = 0;
        }
    }
    return best;
}

}  // namespace

FlatCertificate flatness_certificate(const SpaceId& space, const FlatnessOptions& options) {
    if (options.sphere_samples < 1 || options.restarts < 1) {
        throw DomainError("flatness_certificate: sphere_samples and restarts must be positive");
    }
    const OrthonormalBasis basis = orthonormal_basis(space);
    const int n = space.n;
    const std::size_t dimension = basis.size;
    const auto points = sample_sphere(n, options.sphere_samples, options.seed);
    const SampledBasis sampled = sample_basis(basis, points, n);
    const std::size_t ns = sampled.samples;
    const double sqrt_dim = std::sqrt(static_cast<double>(dimension));

    FlatCertificate cert;
    cert.space = space;
    std::vector<cplx> f(ns);

    auto sup_of = [&](const cplx* base, cplx delta, const cplx* column) {
        double m = 0.0;
        for (std::size_t s = 0; s < ns; ++s) m = std::max(m, std::norm(base[s] + delta * column[s]));
        return std::sqrt(m);
    };
    auto record = [&](double sup, double l2) {
        ++cert.functions_tested;
        cert.max_supporting_ratio = std::max(cert.max_supporting_ratio, sup / (sqrt_dim * l2));
    };

    std::mt19937_64 rng(mix_seed(options.seed, 0x5eed));
    std::normal_distribution<double> gauss;
    std::vector<cplx> best_c;
    double best_ratio = -1.0;
    const cplx directions[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

    for (int restart = 0; restart < options.restarts; ++restart) {
        std::vector<cplx> c(dimension);
        for (auto& x : c) x = cplx(gauss(rng), gauss(rng));
        const double c_norm = norm2(c);
        for (auto& x : c) x /= c_norm;
        std::fill(f.begin(), f.end(), cplx(0.0));
        for (std::size_t k = 0; k < dimension; ++k) {
            const cplx* col = sampled.column(k);
            for (std::size_t s = 0; s < ns; ++s) f[s] += c[k] * col[s];
        }
        double sup = sup_of(f.data(), 0.0, sampled.column(0));
        double l2 = 1.0;
        record(sup, l2);
        double ratio = l2 / sup;

        double step = 0.5;
        for (int sweep = 0; sweep < 100 && step > 1e-3; ++sweep) {
            bool improved = false;
            for (std::size_t k = 0; k < dimension; ++k) {
                for (const cplx dir : directions) {
                    const cplx delta = step * dir;
                    const double cand_l2 = std::sqrt(std::max(0.0, l2 * l2 - std::norm(c[k]) + std::norm(c[k] + delta)));
                    if (cand_l2 <= 0.0) continue;
                    const double cand_sup = sup_of(f.data(), delta, sampled.column(k));
                    record(cand_sup, cand_l2);
                    if (cand_l2 / cand_sup > ratio) {
                        const cplx* col = sampled.column(k);
                        for (std::size_t s = 0; s < ns; ++s) f[s] += delta * col[s];
                        c[k] += delta;
                        l2 = cand_l2;
                        sup = cand_sup;
                        ratio = l2 / sup;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_c = c;
        }
    }

    // Recompute f for the winner and polish its sup norm off the sample grid.
    std::fill(f.begin(), f.end(), cplx(0.0));
    for (std::size_t k = 0; k < dimension; ++k) {
        const cplx* col = sampled.column(k);
        for (std::size_t s = 0; s < ns; ++s) f[s] += best_c[k] * col[s];
    }
    std::vector<std::size_t> order(ns);
    for (std::size_t s = 0; s < ns; ++s) order[s] = s;
    const std::size_t top = std::min<std::size_t>(8, ns);
    std::partial_sort(order.begin(), order.begin() + top, order.end(),
                      [&](std::size_t a, std::size_t b) { return std::norm(f[a]) > std::norm(f[b]); });
    double sup = std::abs(f[order[0]]);
    std::mt19937_64 polish_rng(mix_seed(options.seed, 0x9011));
    for (std::size_t i = 0; i < top; ++i) {
        std::vector<cplx> x(points.begin() + order[i] * n, points.begin() + (order[i] + 1) * n);
        sup = std::max(sup, polish_max(basis, best_c, std::move(x), polish_rng));
    }

    const double l2 = norm2(best_c);
    cert.coefficients = best_c;
    for (auto& x : cert.coefficients) x /= sup;
    cert.sup_norm = 1.0;
    cert.l2_norm = l2 / sup;
    cert.lambda = projection_constant(space).value;
    cert.bound = std::sqrt(std::numbers::pi) / (2.0 * cert.lambda);
    cert.certified = cert.l2_norm >= cert.bound;
    return cert;
}

}  // namespace projconst
