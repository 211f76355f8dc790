#include "projconst/harmonic_spaces.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "projconst/errors.hpp"
#include "projconst/gammakit.hpp"
#include "projconst/jacobi.hpp"

namespace projconst {

std::string_view to_string(SpaceKind kind) {
    return kind == SpaceKind::harmonic ? "harmonic" : "bihom";
}

SpaceKind parse_space_kind(std::string_view text) {
    if (text == "harmonic") return SpaceKind::harmonic;
    if (text == "bihom" || text == "bihomogeneous") return SpaceKind::bihomogeneous;
    throw DomainError("unknown space kind '" + std::string(text) + "'");
}

void SpaceId::validate() const {
    if (n < 2) throw DomainError("complex dimension n must be >= 2");
    if (p < 0 || q < 0) throw DomainError("bidegree (p, q) must be nonnegative");
}

std::string SpaceId::label() const {
    const char* letter = kind == SpaceKind::harmonic ? "H" : "P";
    return std::string(letter) + "_{" + std::to_string(p) + "," + std::to_string(q) + "}(S_" +
           std::to_string(n) + ")";
}

namespace {

using u128 = unsigned __int128;

u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension exceeds 128-bit range");
    return r;
}

u128 binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    u128 c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        c = checked_mul(c, static_cast<u128>(n - k + i)) / static_cast<u128>(i);
    }
    return c;
}

std::int64_t to_int64(u128 v) {
    if (v > static_cast<u128>(std::numeric_limits<std::int64_t>::max())) {
        throw std::overflow_error("dimension exceeds 2^63 - 1");
    }
    return static_cast<std::int64_t>(v);
}

void check_npq(int n, int p, int q) { SpaceId{n, p, q, SpaceKind::harmonic}.validate(); }

double dim_as_double(const SpaceId& space) {
    try {
        return static_cast<double>(dim(space));
    } catch (const std::overflow_error&) {
        return std::exp(log_dim(space));
    }
}

}  // namespace

std::int64_t dim_harmonic(int n, int p, int q) {
    check_npq(n, p, q);
    const u128 product = checked_mul(checked_mul(static_cast<u128>(n + p + q - 1), binomial(n - 2 + p, p)),
                                     binomial(n - 2 + q, q));
    return to_int64(product / static_cast<u128>(n - 1));
}

std::int64_t dim_bihom(int n, int p, int q) {
    check_npq(n, p, q);
    return to_int64(checked_mul(binomial(n - 1 + p, p), binomial(n - 1 + q, q)));
}

std::int64_t dim(const SpaceId& space) {
    return space.kind == SpaceKind::harmonic ? dim_harmonic(space.n, space.p, space.q)
                                             : dim_bihom(space.n, space.p, space.q);
}

double log_dim(const SpaceId& space) {
    space.validate();
    const int n = space.n;
    const int p = space.p;
    const int q = space.q;
    if (space.kind == SpaceKind::harmonic) {
        return std::log(static_cast<double>(n + p + q - 1)) - std::log(static_cast<double>(n - 1)) +
               log_binomial(n - 2 + p, p) + log_binomial(n - 2 + q, q);
    }
    return log_binomial(n - 1 + p, p) + log_binomial(n - 1 + q, q);
}

LegendreCoeffs legendre_coeffs(int n, int p, int q) {
    check_npq(n, p, q);
    LegendreCoeffs out{n, p, q, {}};
    const int m = std::min(p, q);
    out.c.resize(m + 1);
    out.c[0] = 1.0;
    for (int j = 0; j < m; ++j) {
        out.c[j + 1] = -static_cast<double>(p - j) * (q - j) / (static_cast<double>(j + 1) * (j + n - 1)) * out.c[j];
    }
    return out;
}

namespace {

std::complex<double> phase(int p, int q, std::complex<double> w) {
    if (p == q) return 1.0;
    return std::polar(1.0, (p - q) * std::arg(w));
}

double coefficient_profile(const LegendreCoeffs& coeffs, double r) {
    const double rr = one_minus_square(r);
    double sum = 0.0;
    for (std::size_t j = 0; j < coeffs.c.size(); ++j) {
        const int power = coeffs.p + coeffs.q - 2 * static_cast<int>(j);
        sum += coeffs.c[j] * std::pow(r, power) * std::pow(rr, static_cast<double>(j));
    }
    return sum;
}

}  // namespace

std::complex<double> l_diamond_coefficient_form(const LegendreCoeffs& coeffs, std::complex<double> w) {
    const double r = std::abs(w);
    if (r > 1.0 + 1e-12) throw DomainError("l_diamond: |w| must be <= 1");
    return coefficient_profile(coeffs, std::min(r, 1.0)) * phase(coeffs.p, coeffs.q, w);
}

std::complex<double> l_diamond_jacobi_form(int n, int p, int q, std::complex<double> w) {
    check_npq(n, p, q);
    const double r = std::min(std::abs(w), 1.0);
    if (std::abs(w) > 1.0 + 1e-12) throw DomainError("l_diamond: |w| must be <= 1");
    const int m = std::min(p, q);
    const int gap = std::abs(p - q);
    const JacobiParams params{static_cast<double>(n - 2), static_cast<double>(gap), m};
    const double inv_binom = std::exp(-log_binomial(m + n - 2, m));
    const double value = std::pow(r, gap) * inv_binom * JacobiRecurrence(params)(2.0 * r * r - 1.0);
    return value * phase(p, q, w);
}

std::complex<double> l_diamond(int n, int p, int q, std::complex<double> w) {
    if (std::min(p, q) <= kCoefficientFormMaxDegree) {
        return l_diamond_coefficient_form(legendre_coeffs(n, p, q), w);
    }
    return l_diamond_jacobi_form(n, p, q, w);
}

RadialKernel::RadialKernel(const SpaceId& space)
    : space_(space),
      scale_(0.0),
      alpha_(0.0),
      poly_(JacobiParams{}),
      use_coefficients_(false),
      coeffs_{},
      dim_(0.0) {
    space.validate();
    const int n = space.n;
    const int m = space.min_degree();
    const int gap = space.gap();
    if (space.kind == SpaceKind::harmonic) {
        alpha_ = n - 2;
        dim_ = dim_as_double(space);
        use_coefficients_ = m <= kCoefficientFormMaxDegree;
        if (use_coefficients_) coeffs_ = legendre_coeffs(n, space.p, space.q);
        // N_{n,p,q} * m!(n-2)!/(m+n-2)!
        scale_ = std::exp(log_dim(space) - log_binomial(m + n - 2, m));
    } else {
        alpha_ = n - 1;
        dim_ = dim_as_double(space);
        // Gamma(n + max(p,q)) / (Gamma(n) Gamma(1 + max(p,q)))
        scale_ = std::exp(log_binomial(n - 1 + space.max_degree(), space.max_degree()));
    }
    poly_ = JacobiRecurrence(JacobiParams{alpha_, static_cast<double>(gap), m});
}

double RadialKernel::profile(double r) const {
    r = std::min(std::abs(r), 1.0);
    if (use_coefficients_) return dim_ * coefficient_profile(coeffs_, r);
    return scale_ * std::pow(r, space_.gap()) * poly_(2.0 * r * r - 1.0);
}

double RadialKernel::modulus(double r) const { return std::abs(profile(r)); }

std::complex<double> RadialKernel::operator()(double r, double theta) const {
    const double rho = profile(r);
    if (space_.p == space_.q) return rho;
    return std::polar(1.0, (space_.p - space_.q) * theta) * rho;
}

std::complex<double> RadialKernel::at(std::complex<double> w) const {
    if (std::abs(w) > 1.0 + 1e-12) throw DomainError("kernel: |eta_1| must be <= 1");
    return profile(std::abs(w)) * phase(space_.p, space_.q, w);
}

RadialKernel kernel(const SpaceId& space) { return RadialKernel(space); }

}  // namespace projconst
