#pragma once

// Reproducing kernels built from first principles: the Gram matrix of the
// monomials z^alpha conj(z)^beta in L2(sigma_n), inverted in exact rational
// arithmetic. Independent of every floating-point formula in the library.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "projconst/harmonic_spaces.hpp"

namespace projconst {

using Rational = mpq_class;

struct MultiIndexPair {
    std::vector<int> alpha;
    std::vector<int> beta;

    friend bool operator==(const MultiIndexPair&, const MultiIndexPair&) = default;
};

/// All multi-indices of length n and total degree `degree`, in descending
/// lexicographic order (so (degree, 0, ..., 0) comes first).
std::vector<std::vector<int>> multi_indices(int n, int degree);

/// The monomial basis of P_{p,q}(S_n).
std::vector<MultiIndexPair> monomial_basis(int n, int p, int q);

/// int_{S_n} z^alpha conj(z)^beta dsigma = [alpha == beta] (n-1)! alpha! / (n-1+|alpha|)!.
Rational monomial_moment(int n, std::span<const int> alpha, std::span<const int> beta);

/// <m_a, m_b> = int m_a conj(m_b) dsigma.
Rational monomial_inner_product(int n, const MultiIndexPair& a, const MultiIndexPair& b);

/// Dense square matrix of exact rationals.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t dimension);

    std::size_t dimension() const { return dimension_; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dimension_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dimension_ + j]; }

    bool is_symmetric() const;
    /// Exact Gaussian elimination. Throws NumericalError if singular.
    std::vector<Rational> solve(std::vector<Rational> rhs) const;

private:
    std::size_t dimension_;
    std::vector<Rational> entries_;
};

RationalMatrix gram_matrix(int n, std::span<const MultiIndexPair> basis);

/// True iff every nonzero Gram entry pairs monomials with alpha - beta equal,
/// i.e. the Gram matrix is block diagonal by the phase multi-index.
bool gram_has_phase_block_structure(int n, std::span<const MultiIndexPair> basis, const RationalMatrix& gram);

/// k_S(e_1, eta) = sum_i coefficient_i * eta^alpha_i conj(eta)^beta_i with
/// exact rational coefficients.
struct GramKernel {
    SpaceId space;
    std::vector<MultiIndexPair> monomials;
    std::vector<Rational> coefficients;

    std::complex<double> evaluate(std::span<const std::complex<double>> eta) const;
    /// Evaluation at eta = (w, sqrt(1-|w|^2), 0, ..., 0).
    std::complex<double> at_first_coordinate(std::complex<double> w) const;
    /// Exact value at eta = (w, sqrt(1-|w|^2), 0, ...) for rational w = re + i im.
    std::pair<Rational, Rational> exact_at(const Rational& re, const Rational& im) const;
};

inline constexpr std::int64_t kGramMaxDimension = 400;

/// Builds k_S(e_1, .) for S = P_{p,q} from the Gram block containing the
/// monomial z_1^p conj(z_1)^q; for S = H_{p,q} as the difference of the
/// P_{p,q} and P_{p-1,q-1} kernels (valid on the sphere).
GramKernel gram_kernel_expansion(const SpaceId& space);

std::complex<double> gram_kernel(const SpaceId& space, std::complex<double> w);

}  // namespace projconst
