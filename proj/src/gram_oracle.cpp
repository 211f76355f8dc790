#include "projconst/gram_oracle.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "projconst/errors.hpp"

namespace projconst {

std::vector<std::vector<int>> multi_indices(int n, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(n, 0);
    std::function<void(int, int)> fill = [&](int position, int remaining) {
        if (position == n - 1) {
            current[position] = remaining;
            out.push_back(current);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            current[position] = k;
            fill(position + 1, remaining - k);
        }
    };
    if (n >= 1 && degree >= 0) fill(0, degree);
    return out;
}

std::vector<MultiIndexPair> monomial_basis(int n, int p, int q) {
    std::vector<MultiIndexPair> basis;
    const auto alphas = multi_indices(n, p);
    const auto betas = multi_indices(n, q);
    basis.reserve(alphas.size() * betas.size());
    for (const auto& a : alphas) {
        for (const auto& b : betas) basis.push_back({a, b});
    }
    return basis;
}

namespace {

mpz_class factorial(long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

Rational monomial_moment(int n, std::span<const int> alpha, std::span<const int> beta) {
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n) {
        throw DomainError("monomial_moment: multi-index length must equal n");
    }
    for (int k = 0; k < n; ++k) {
        if (alpha[k] != beta[k]) return Rational(0);
    }
    long total = 0;
    mpz_class numerator = factorial(n - 1);
    for (int a : alpha) {
        numerator *= factorial(a);
        total += a;
    }
    Rational r(numerator, factorial(n - 1 + total));
    r.canonicalize();
    return r;
}

Rational monomial_inner_product(int n, const MultiIndexPair& a, const MultiIndexPair& b) {
    // m_a conj(m_b) = z^{alpha_a + beta_b} conj(z)^{beta_a + alpha_b}
    std::vector<int> left(n);
    std::vector<int> right(n);
    for (int k = 0; k < n; ++k) {
        left[k] = a.alpha[k] + b.beta[k];
        right[k] = a.beta[k] + b.alpha[k];
    }
    return monomial_moment(n, left, right);
}

RationalMatrix::RationalMatrix(std::size_t dimension)
    : dimension_(dimension), entries_(dimension * dimension, Rational(0)) {}

bool RationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < dimension_; ++i) {
        for (std::size_t j = i + 1; j < dimension_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

std::vector<Rational> RationalMatrix::solve(std::vector<Rational> rhs) const {
    const std::size_t d = dimension_;
    if (rhs.size() != d) throw DomainError("RationalMatrix::solve: size mismatch");
    std::vector<Rational> a = entries_;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && a[pivot * d + col] == 0) ++pivot;
        if (pivot == d) throw NumericalError("Gram matrix is singular");
        if (pivot != col) {
            for (std::size_t k = 0; k < d; ++k) std::swap(a[col * d + k], a[pivot * d + k]);
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t row = col + 1; row < d; ++row) {
            if (a[row * d + col] == 0) continue;
            const Rational factor = a[row * d + col] / a[col * d + col];
            for (std::size_t k = col; k < d; ++k) a[row * d + k] -= factor * a[col * d + k];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> x(d);
    for (std::size_t i = d; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t k = i + 1; k < d; ++k) acc -= a[i * d + k] * x[k];
        x[i] = acc / a[i * d + i];
    }
    return x;
}

RationalMatrix gram_matrix(int n, std::span<const MultiIndexPair> basis) {
    RationalMatrix g(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            g(i, j) = monomial_inner_product(n, basis[i], basis[j]);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

bool gram_has_phase_block_structure(int n, std::span<const MultiIndexPair> basis, const RationalMatrix& gram) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            bool same_phase = true;
            for (int k = 0; k < n; ++k) {
                if (basis[i].alpha[k] - basis[i].beta[k] != basis[j].alpha[k] - basis[j].beta[k]) {
                    same_phase = false;
                    break;
                }
            }
            if (!same_phase && gram(i, j) != 0) return false;
            // Within a block every entry is a genuine moment, hence positive.
            if (same_phase && gram(i, j) <= 0) return false;
        }
    }
    return true;
}

namespace {

/// Members of the Gram block of z_1^p conj(z_1)^q: alpha = (p-j, b'),
/// beta = (q-j, b') with |b'| = j.
std::vector<MultiIndexPair> first_coordinate_block(int n, int p, int q) {
    std::vector<MultiIndexPair> block;
    for (int j = 0; j <= std::min(p, q); ++j) {
        for (const auto& rest : multi_indices(n - 1, j)) {
            MultiIndexPair m;
            m.alpha.push_back(p - j);
            m.beta.push_back(q - j);
            m.alpha.insert(m.alpha.end(), rest.begin(), rest.end());
            m.beta.insert(m.beta.end(), rest.begin(), rest.end());
            block.push_back(std::move(m));
        }
    }
    return block;
}

void append_bihom_kernel(int n, int p, int q, const Rational& sign, GramKernel& out) {
    const auto block = first_coordinate_block(n, p, q);
    const RationalMatrix g = gram_matrix(n, block);
    std::vector<Rational> unit(block.size(), Rational(0));
    unit[0] = 1;  // the block starts with z_1^p conj(z_1)^q, the only monomial not vanishing at e_1
    const std::vector<Rational> x = g.solve(unit);
    for (std::size_t i = 0; i < block.size(); ++i) {
        out.monomials.push_back(block[i]);
        out.coefficients.push_back(sign * x[i]);
    }
}

std::complex<double> monomial_value(const MultiIndexPair& m, std::span<const std::complex<double>> eta) {
    std::complex<double> v = 1.0;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        for (int e = 0; e < m.alpha[k]; ++e) v *= eta[k];
        for (int e = 0; e < m.beta[k]; ++e) v *= std::conj(eta[k]);
    }
    return v;
}

}  // namespace

GramKernel gram_kernel_expansion(const SpaceId& space) {
    space.validate();
    if (dim_bihom(space.n, space.p, space.q) > kGramMaxDimension) {
        throw UnsupportedParameter("gram_kernel: dim P_{p,q}(S_n) exceeds " + std::to_string(kGramMaxDimension));
    }
    GramKernel out;
    out.space = space;
    append_bihom_kernel(space.n, space.p, space.q, Rational(1), out);
    if (space.kind == SpaceKind::harmonic && space.p >= 1 && space.q >= 1) {
        append_bihom_kernel(space.n, space.p - 1, space.q - 1, Rational(-1), out);
    }
    return out;
}

std::complex<double> GramKernel::evaluate(std::span<const std::complex<double>> eta) const {
    if (static_cast<int>(eta.size()) != space.n) throw DomainError("GramKernel: point has wrong dimension");
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        sum += coefficients[i].get_d() * monomial_value(monomials[i], eta);
    }
    return sum;
}

std::complex<double> GramKernel::at_first_coordinate(std::complex<double> w) const {
    const double r2 = std::norm(w);
    if (r2 > 1.0 + 1e-12) throw DomainError("GramKernel: |w| must be <= 1");
    std::vector<std::complex<double>> eta(space.n, 0.0);
    eta[0] = w;
    eta[1] = std::sqrt(std::max(0.0, 1.0 - r2));
    return evaluate(eta);
}

std::pair<Rational, Rational> GramKernel::exact_at(const Rational& re, const Rational& im) const {
    const Rational rest = 1 - (re * re + im * im);  // |eta_2|^2
    if (rest < 0) throw DomainError("GramKernel: |w| must be <= 1");
    auto multiply = [](std::pair<Rational, Rational>& acc, const Rational& a, const Rational& b) {
        const Rational real = acc.first * a - acc.second * b;
        const Rational imag = acc.first * b + acc.second * a;
        acc = {real, imag};
    };
    std::pair<Rational, Rational> total{0, 0};
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        const auto& m = monomials[i];
        std::pair<Rational, Rational> v{1, 0};
        for (int e = 0; e < m.alpha[0]; ++e) multiply(v, re, im);
        for (int e = 0; e < m.beta[0]; ++e) multiply(v, re, -im);
        for (std::size_t k = 1; k < m.alpha.size(); ++k) {
            const int power = m.alpha[k] + m.beta[k];
            if (power == 0) continue;
            if (k >= 2) {
                v = {0, 0};  // eta_k = 0 for k >= 3
                break;
            }
            if (m.alpha[k] != m.beta[k]) {
                throw UnsupportedParameter("GramKernel::exact_at: odd power of the real coordinate");
            }
            for (int e = 0; e < m.alpha[k]; ++e) {
                v.first *= rest;
                v.second *= rest;
            }
        }
        total.first += coefficients[i] * v.first;
        total.second += coefficients[i] * v.second;
    }
    return total;
}

std::complex<double> gram_kernel(const SpaceId& space, std::complex<double> w) {
    return gram_kernel_expansion(space).at_first_coordinate(w);
}

}  // namespace projconst
