#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nsg/rational.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// H_S(ζ_d^i) with ζ_d = exp(2πi/d), computed as P_S(ζ_d^i) / (1 - ζ_d^i).
///
/// The exact integer coefficients of P_S are first folded by exponent mod d
/// (ζ_d^d = 1), then the folded polynomial is evaluated by Horner's rule.
/// Requires d >= 2; throws domain_error when i ≡ 0 (mod d), the pole at x = 1.
std::complex<double> hilbert_at_root(const NumericalSemigroup& s, i64 d, i64 i);

/// Σ_{n=1}^{d-1} 1/(1 - ζ_d^n), d >= 2.
std::complex<double> root_of_unity_sum(i64 d);

/// max(|Re Σ - (d-1)/2|, |Im Σ|) for Σ = root_of_unity_sum(d).
double root_of_unity_identity_check(i64 d);

struct RootsGenus {
    i64 genus = 0;
    double residual = 0.0;      // |estimate - genus| before rounding
    double imaginary = 0.0;     // |Im| of the root sum; 0 up to rounding
};

inline constexpr double default_rounding_tolerance = 1e-6;

/// g(S/d) = (1/d) [g(S) + (d-1)/2 - Σ_{i=1}^{d-1} H_S(ζ_d^i)] in complex doubles.
///
/// d = 1 returns g(S) with zero residual. Throws numerical_failure carrying
/// the residual if the estimate is farther than `tolerance` from an integer.
RootsGenus evaluate_genus_quotient_via_roots(const NumericalSemigroup& s, i64 d,
                                             double tolerance = default_rounding_tolerance);

inline i64 genus_quotient_via_roots(const NumericalSemigroup& s, i64 d,
                                    double tolerance = default_rounding_tolerance) {
    return evaluate_genus_quotient_via_roots(s, d, tolerance).genus;
}

/// Sylvester: F(<a,b>) = ab - a - b, g(<a,b>) = (a-1)(b-1)/2 for coprime a, b.
FrobeniusGenus sylvester_invariants(i64 a, i64 b);

/// Exact closed form for g(<a,b>/d) with a, b, d pairwise coprime and d >= 2.
///
/// With a* the inverse of a mod d in [1, d-1] and q = floor((a-1)/d):
///   (a-1)(b+d-a*ab)/(2d) + q(a*bq + a*b - 2)/2 + Σ_{1<=j<a, d∤j} floor(a*bj/d)
/// The two rational terms are combined over 2d and divided once.
i64 genus_quotient_ed2_closed_form(i64 a, i64 b, i64 d);

/// True when the closed form above is defined for (a, b, d).
bool ed2_closed_form_applies(i64 a, i64 b, i64 d);

/// The same expression evaluated whenever a is invertible mod d, without the
/// pairwise coprimality requirement. nullopt when a is not invertible or the
/// rational terms do not combine to an integer. Exploration only.
std::optional<i64> ed2_closed_form_value(i64 a, i64 b, i64 d);

/// g(<a,b>/d) - (a-1)(b-1)/(2d) for a single coprime pair, as an exact rational.
Rational cabd_offset(i64 a, i64 b, i64 d);

/// The constant C_{a,b,d}: the common value of `cabd_offset` over all samples.
///
/// Samples must share residues (a_class, b_class) mod d and be pairwise
/// coprime with d; at least two are required. Throws theorem_violation naming
/// two disagreeing samples if the offset is not constant.
Rational extract_cabd_constant(i64 a_class, i64 b_class, i64 d, const std::vector<std::pair<i64, i64>>& samples);

/// Every pairwise coprime (a, b) with 1 <= a, b <= max_ab in the given class.
std::vector<std::pair<i64, i64>> cabd_admissible_pairs(i64 a_class, i64 b_class, i64 d, i64 max_ab);

/// Degree-2 fit of a -> g(<a, a+k>/d) on one residue class of a mod d.
struct ClassFit {
    i64 residue = 0;
    Rational c2, c1, c0;                 // g = c2 a^2 + c1 a + c0
    std::vector<std::pair<i64, i64>> samples; // (a, brute-force genus)
    std::optional<Rational> cabd_constant;    // set when g - (a-1)(a+k-1)/(2d) is constant
    bool pairwise_coprime_class = false;       // gcd(r, d) = gcd(r + k, d) = 1

    Rational evaluate(i64 a) const { return c2 * Rational(a) * Rational(a) + c1 * Rational(a) + c0; }
};

struct QuasipolynomialFit {
    i64 d = 1;
    i64 k = 1;
    std::vector<ClassFit> per_class; // admissible classes in increasing residue order
};

/// Residues r mod d for which a ≡ r with gcd(a, k) = 1 is possible.
std::vector<i64> quasipolynomial_classes(i64 k, i64 d);

/// Fits g(<a, a+k>/d) as a quadratic in a on every admissible class of a mod d,
/// sampling a ∈ [a_min, a_max] with gcd(a, k) = 1. Interpolates through the
/// first three samples with exact rational Lagrange interpolation, then checks
/// the leading coefficient is 1/(2d) and every remaining sample is reproduced.
///
/// Throws precondition_error when a class has fewer than four samples and
/// theorem_violation on any mismatch.
QuasipolynomialFit fit_quasipolynomial(i64 k, i64 d, i64 a_min, i64 a_max);

/// Quadratic through three points with distinct abscissae, as (c2, c1, c0).
std::tuple<Rational, Rational, Rational> lagrange_quadratic(const std::pair<i64, i64>& p0,
                                                            const std::pair<i64, i64>& p1,
                                                            const std::pair<i64, i64>& p2);

} // namespace nsg
