#pragma once

// Dimensions, (p,q)-Legendre zonal functions and reproducing kernels of the
// bihomogeneous harmonic spaces H_{p,q}(S_n) and the bihomogeneous
// polynomial spaces P_{p,q}(S_n) on the unit sphere of C^n.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "projconst/jacobi.hpp"

namespace projconst {

enum class SpaceKind { harmonic, bihomogeneous };

std::string_view to_string(SpaceKind kind);
/// Accepts "harmonic" and "bihom"/"bihomogeneous". Throws DomainError otherwise.
SpaceKind parse_space_kind(std::string_view text);

struct SpaceId {
    int n = 2;
    int p = 0;
    int q = 0;
    SpaceKind kind = SpaceKind::harmonic;

    void validate() const;
    int min_degree() const { return p < q ? p : q; }
    int max_degree() const { return p < q ? q : p; }
    int gap() const { return p < q ? q - p : p - q; }
    SpaceId swapped() const { return {n, q, p, kind}; }
    std::string label() const;

    friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

/// N_{n,p,q} = dim H_{p,q}(S_n). Exact; throws std::overflow_error above 2^63-1.
std::int64_t dim_harmonic(int n, int p, int q);
/// dim P_{p,q}(S_n) = binom(n-1+p, p) binom(n-1+q, q).
std::int64_t dim_bihom(int n, int p, int q);
std::int64_t dim(const SpaceId& space);
/// ln dim, usable far beyond the int64 range.
double log_dim(const SpaceId& space);

struct LegendreCoeffs {
    int n = 2;
    int p = 0;
    int q = 0;
    std::vector<double> c;
};

/// c_j(n,p,q), j = 0..min(p,q), via the ratio recurrence.
LegendreCoeffs legendre_coeffs(int n, int p, int q);

/// L^diamond_{n,p,q}(w) from its coefficient expansion
/// sum_j c_j w^{p-j} conj(w)^{q-j} (1-|w|^2)^j.
std::complex<double> l_diamond_coefficient_form(const LegendreCoeffs& coeffs, std::complex<double> w);

/// L^diamond_{n,p,q}(w) through the Jacobi polynomial P^{(n-2,|p-q|)}_{min(p,q)}.
std::complex<double> l_diamond_jacobi_form(int n, int p, int q, std::complex<double> w);

/// Dispatches to the coefficient form for min(p,q) <= 30 and to the Jacobi
/// form beyond, where the alternating sum loses precision.
std::complex<double> l_diamond(int n, int p, int q, std::complex<double> w);

inline constexpr int kCoefficientFormMaxDegree = 30;

/// Zonal reproducing kernel k_S(e_1, eta) as a function of eta_1 = r e^{i theta}.
/// It factors as e^{i(p-q) theta} * profile(r) with a real radial profile.
class RadialKernel {
public:
    explicit RadialKernel(const SpaceId& space);

    const SpaceId& space() const { return space_; }

    /// Real radial factor (sign included).
    double profile(double r) const;
    double modulus(double r) const;
    std::complex<double> operator()(double r, double theta) const;
    std::complex<double> at(std::complex<double> w) const;

private:
    SpaceId space_;
    double scale_;  // factor in front of r^{|p-q|} P(2r^2 - 1)
    double alpha_;
    JacobiRecurrence poly_;
    bool use_coefficients_;
    LegendreCoeffs coeffs_;
    double dim_;
};

RadialKernel kernel(const SpaceId& space);

/// 1 - r^2 without cancellation near r = 1.
inline double one_minus_square(double r) { return (1.0 - r) * (1.0 + r); }

}  // namespace projconst
