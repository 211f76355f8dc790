#pragma once

// Projection constants of H_{p,q}(S_n) and P_{p,q}(S_n): the weighted L1
// Jacobi integrals, closed forms, upper bounds and asymptotic constants.

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "projconst/harmonic_spaces.hpp"
#include "projconst/jacobi.hpp"

namespace projconst {

enum class LambdaMethod { jacobi_integral, closed_form, monte_carlo, gram_oracle, disk_reduce };

std::string_view to_string(LambdaMethod method);

struct LambdaResult {
    SpaceId space;
    double value = 0.0;
    LambdaMethod method = LambdaMethod::jacobi_integral;
    double abs_error_estimate = 0.0;
    bool reliable = true;
};

/// lambda(H_{p,q}(S_n)) = c(p,q,n) int_0^1 (1-t)^{n-2} t^{|p-q|/2} |P^{(n-2,|p-q|)}_{min(p,q)}(2t-1)| dt.
LambdaResult lambda_harmonic(int n, int p, int q);

/// lambda(P_{p,q}(S_n)), same integral with P^{(n-1,|p-q|)} and prefactor
/// Gamma(n+max)/(Gamma(n-1) Gamma(1+max)).
LambdaResult lambda_bihom(int n, int p, int q);

LambdaResult projection_constant(const SpaceId& space);

/// Kadets-Snobar: sqrt(dim S).
double kadets_snobar_bound(const SpaceId& space);

namespace closed {
struct RwHomogeneous { int n; int p; };  // lambda(H_{p,0}(S_n))
struct H11 { int n; };                   // lambda(H_{1,1}(S_n))
struct P11 { int n; };                   // lambda(P_{1,1}(S_n))
struct HarmonicP1Dim2 { int p; };        // lambda(H_{p,1}(S_2)), p >= 2
struct BihomP1Dim2 { int p; };           // lambda(P_{p,1}(S_2)), p >= 2
struct Rutovitz { int n; };              // lambda(l_2^n(C))
}  // namespace closed

using ClosedFormCase = std::variant<closed::RwHomogeneous, closed::H11, closed::P11, closed::HarmonicP1Dim2,
                                    closed::BihomP1Dim2, closed::Rutovitz>;

/// Evaluates the closed form. Throws DomainError outside its parameter range.
double lambda_closed(const ClosedFormCase& c);

/// Every closed form that applies to `space` (after the (p,q) swap symmetry).
std::vector<ClosedFormCase> closed_forms_for(const SpaceId& space);

/// Finite Gamma-ratio upper bound (triangle inequality on the explicit Jacobi sum).
double upper_bound(SpaceKind kind, int n, int p, int q);

/// lim_{p -> inf} upper_bound(kind, n, p, q).
double upper_bound_limit(SpaceKind kind, int n, int q);

/// The cruder closed bound 2^{n-1} 3^q binom(n-1+q, q) (bihomogeneous)
/// resp. 2^{n-1} 3^q binom(n-2+q, q) (harmonic).
double upper_bound_limit_simple(SpaceKind kind, int n, int q);

/// Closed-form constants for lim lambda(.._{p,p+d}) / p^{n-3/2}:
/// harmonic 2 Gamma((2n-1)/4) Gamma(3/4) / (pi^{3/2} Gamma(n-1) Gamma((n+1)/2)),
/// bihomogeneous Gamma((2n-3)/4) Gamma(3/4) / (pi^{3/2} Gamma(n-1) Gamma(n/2)).
double asymptotic_constant(SpaceKind kind, int n);

/// The limit the integral formulas actually converge to: twice
/// asymptotic_constant. The closed forms carry the prefactor
/// 2^{-(n+|p-q|/2)} where the substitution s = 2t-1 gives 2^{-(n-1)-|p-q|/2}.
double asymptotic_limit(SpaceKind kind, int n);

struct AsymptoticRow {
    int p = 0;
    int q = 0;
    double lambda = 0.0;
    double ratio = 0.0;  // lambda / p^{n-3/2}
};

/// lambda(.._{p,p+d}(S_n)) and the normalized ratio for each p.
std::vector<AsymptoticRow> asymptotic_study(SpaceKind kind, int n, int d, const std::vector<int>& p_values);

struct BandRow {
    int p = 0;
    double lambda = 0.0;
    bool asserted = false;  // only p >= kBandMinDegree is checked
    bool inside = true;
};

struct BandReport {
    SpaceKind kind = SpaceKind::harmonic;
    int n = 2;
    double lower = 0.0;
    double upper = 0.0;
    std::vector<BandRow> rows;
    bool pass = true;
};

inline constexpr int kBandMinDegree = 50;

/// Liminf/limsup band for lambda(.._{p,1}(S_n)) as p grows:
/// harmonic [(n-1) 2^{n-1}, 3(n-1) 2^{n-1}], bihomogeneous [(n-2) 2^{n-1}, (3n-2) 2^{n-1}].
std::pair<double, double> q1_band(SpaceKind kind, int n);
BandReport q1_band_check(SpaceKind kind, int n, const std::vector<int>& p_values, double tolerance = 1e-9);

}  // namespace projconst
