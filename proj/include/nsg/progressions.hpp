#pragma once

#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Parameters of <a, a+k, a+2k> / d with d | a.
///
/// s = a/d, and t is defined by d = 2t+1 when d is odd and d = 2t when even.
/// gcd(d, k) = 1 follows from gcd(a, k) = 1.
struct Ap3Spec {
    i64 a = 0;
    i64 k = 0;
    i64 d = 1;
    i64 s = 0;
    i64 t = 0;

    /// Validates gcd(a, k) = 1, a, k >= 1 and d | a.
    static Ap3Spec make(i64 a, i64 k, i64 d);

    std::vector<i64> generators() const { return {a, a + k, a + 2 * k}; }
};

/// The full progression <a, a+k, ..., a+(a-1)k>, gcd(a, k) = 1.
struct FullApSpec {
    i64 a = 0;
    i64 k = 0;

    static FullApSpec make(i64 a, i64 k);

    std::vector<i64> generators() const;
};

/// <a, a+k, a+2k> is symmetric exactly when a is even. Requires a >= 2
/// (a = 1 gives ℕ) and gcd(a, k) = 1.
bool ap3_symmetric_iff_even(i64 a, i64 k);

/// Whether `ap3_quotient_generators` accepts the spec: d >= 3, and s even
/// when d is odd.
bool ap3_generators_apply(const Ap3Spec& spec);

/// Explicit generators of <a, a+k, a+2k>/d:
///   odd d = 2t+1:  <s, s+k+ts, s+2k+2ts>
///   even d = 2t:   <s, k+st>
NumericalSemigroup ap3_quotient_generators(const Ap3Spec& spec);

/// F and g of <a, a+k, a+2k>/d for even d >= 4:
///   F = (s-1)(a+2k)/2 - s,   g = (s-1)(a+2k-2)/4.
FrobeniusGenus ap3_even_d_invariants(const Ap3Spec& spec);

/// F and g of <a, a+k, a+2k>/d for odd a (so d = 2t+1 and s are odd):
///   F = ((s-1)t + (s-1)/2) s + (s-1)k - s
///   g = (s(s-1)t + (s^2-1)/2 + (s-1)k - (s-1)) / 2
/// Also checks 2g - F = (s+1)/2.
FrobeniusGenus ap3_odd_a_invariants(const Ap3Spec& spec);

/// <a, a+k, ..., a+(a-1)k>/d = <s, s+k, ..., s+(s-1)k> for d | a, s = a/d.
NumericalSemigroup full_ap_quotient(const FullApSpec& spec, i64 d);

/// F = k(s-1), g = (k+1)(s-1)/2 for the quotient by a divisor d of a with
/// s = a/d >= 2; asserts g = (F + s - 1)/2. s = 1 (quotient ℕ) is rejected.
FrobeniusGenus full_ap_divisor_identity(const FullApSpec& spec, i64 d);

/// F = (a-1)k/d, g = (a-1)(k/d + 1)/2 for d | k and a >= 2; asserts
/// g = (F + a - 1)/2.
FrobeniusGenus full_ap_d_divides_k(const FullApSpec& spec, i64 d);

struct OpenProblemRow {
    i64 d = 1;
    i64 frobenius = -1;
    i64 genus = 0;
    i64 twice_genus_minus_frobenius = 1;
};

/// Brute-force F, g and 2g - F of <a, a+k, ..., a+ℓk>/d for d in [d_min, d_max].
/// Requires gcd(a, k) = 1 and 3 <= ℓ <= a - 2. No closed form is claimed.
std::vector<OpenProblemRow> open_problem_sweep(i64 a, i64 k, i64 ell, i64 d_min, i64 d_max);

} // namespace nsg
