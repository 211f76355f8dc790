#pragma once

// Two independent ways of integrating a function of the first coordinate
// eta_1 over the unit sphere S_n of C^n: reduction to the unit disk, and
// Monte Carlo sampling of the sphere itself.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "projconst/gauss_legendre.hpp"

namespace projconst {

using DiskFunction = std::function<double(std::complex<double>)>;

struct DiskOptions {
    int theta_points = 64;
    double rel_tol = 1e-12;
};

/// (n-1)/pi * int_0^1 int_{-pi}^{pi} (1-r^2)^{n-2} f(r e^{i theta}) r dtheta dr,
/// which equals int_{S_n} f(eta_1) dsigma(eta).
/// Trapezoid in theta, adaptive Gauss-Legendre in r.
QuadResult disk_reduce(const DiskFunction& f, int n, const DiskOptions& options = {});

/// Same reduction for an f that depends on |w| only; the theta integral is 2 pi.
QuadResult disk_reduce_radial(const std::function<double(double)>& g, int n, double rel_tol = 1e-12);

/// Theta grid that integrates the phases of a (p,q) kernel exactly.
inline int theta_points_for(int p, int q) { return 4 * (p + q) + 8; }

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

/// Uniform points on S_n: 2n independent standard Gaussians (Box-Muller on
/// std::mt19937_64), read as n complex coordinates and normalized.
/// A sampler is identified by (seed, stream) and is fully deterministic.
class SphereSampler {
public:
    SphereSampler(int n, std::uint64_t seed, std::uint64_t stream = 0);

    int dimension() const { return n_; }
    void next(std::span<std::complex<double>> point);

private:
    double uniform_open();  // in (0, 1]
    int n_;
    std::mt19937_64 engine_;
};

/// Deterministic 64-bit mix of seed and stream id (SplitMix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Samples per independently seeded stream. Results do not depend on how
/// many worker threads process the streams.
inline constexpr std::uint64_t kMcChunk = 1u << 16;

/// Sample mean of g(eta_1) over uniform points of S_n, with the standard
/// error of the mean in abs_error_estimate.
QuadResult mc_first_coordinate(int n, const McConfig& config, const DiskFunction& g);

/// `count` uniform sphere points, flattened row-major (count x n).
std::vector<std::complex<double>> sample_sphere(int n, std::size_t count, std::uint64_t seed);

/// Runs body(i) for i in [0, count) on up to `workers` threads (0: hardware).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned workers = 0);

}  // namespace projconst
