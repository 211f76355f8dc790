#pragma once

// Search for "flat" members of H_{p,q}(S_n) / P_{p,q}(S_n): functions with
// sup norm 1 whose L2 norm reaches sqrt(pi)/(2 lambda(S)).

#include <complex>
#include <cstdint>
#include <vector>

#include "projconst/gram_oracle.hpp"
#include "projconst/harmonic_spaces.hpp"

namespace projconst {

inline constexpr std::int64_t kFlatnessMaxDimension = 64;

/// An L2(sigma_n)-orthonormal basis of S, each element a combination of the
/// monomials of P_{p,q}(S_n): psi_k = sum_j coefficients(k, j) m_j.
struct OrthonormalBasis {
    SpaceId space;
    std::vector<MultiIndexPair> monomials;
    std::size_t size = 0;
    std::vector<double> coefficients;  // size x monomials.size(), row-major

    /// Values psi_k(x) for k = 0..size-1.
    std::vector<std::complex<double>> evaluate(std::span<const std::complex<double>> x) const;
};

OrthonormalBasis orthonormal_basis(const SpaceId& space);

struct FlatnessOptions {
    std::size_t sphere_samples = 100'000;
    int restarts = 8;
    std::uint64_t seed = 0;
};

struct FlatCertificate {
    SpaceId space;
    /// f = sum_k coefficients[k] psi_k, scaled so that sup |f| = 1.
    std::vector<std::complex<double>> coefficients;
    double sup_norm = 0.0;
    double l2_norm = 0.0;
    double bound = 0.0;  // sqrt(pi) / (2 lambda(S))
    double lambda = 0.0;
    bool certified = false;
    /// max over every f examined of sup_sampled |f| / (sqrt(dim) ||f||_2); must be <= 1.
    double max_supporting_ratio = 0.0;
    std::size_t functions_tested = 0;
};

/// Random restarts plus coordinate-wise local improvement of ||f||_2 / ||f||_inf,
/// with the sup norm estimated on a fixed sphere sample and then polished by
/// local search around the best sample points. Deterministic given the seed.
/// certified == false means the search was inconclusive, not that no flat f exists.
FlatCertificate flatness_certificate(const SpaceId& space, const FlatnessOptions& options = {});

}  // namespace projconst
