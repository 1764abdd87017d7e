#include "nsg/progressions.hpp"

#include <numeric>
#include <string>

#include "nsg/quotient.hpp"

namespace nsg {
namespace {

std::string describe(const Ap3Spec& p) {
    return "(a=" + std::to_string(p.a) + ", k=" + std::to_string(p.k) + ", d=" + std::to_string(p.d) + ")";
}

// Closed forms divide by 2 or 4; a remainder means the formula was mistranscribed.
i64 divide_exactly(i64 num, i64 den, const std::string& what) {
    if (num % den != 0)
        throw theorem_violation(what + ": " + std::to_string(num) + " is not divisible by " + std::to_string(den));
    return num / den;
}

void require_coprime(i64 a, i64 k) {
    if (a < 1 || k < 1)
        throw precondition_error("a and k must be positive");
    if (std::gcd(a, k) != 1)
        throw precondition_error("a = " + std::to_string(a) + " and k = " + std::to_string(k) + " must be coprime");
}

} // namespace

Ap3Spec Ap3Spec::make(i64 a, i64 k, i64 d) {
    require_coprime(a, k);
    if (d < 1 || a % d != 0)
        throw precondition_error("d = " + std::to_string(d) + " must be a positive divisor of a = " + std::to_string(a));
    return {a, k, d, a / d, d % 2 == 1 ? (d - 1) / 2 : d / 2};
}

FullApSpec FullApSpec::make(i64 a, i64 k) {
    require_coprime(a, k);
    return {a, k};
}

std::vector<i64> FullApSpec::generators() const {
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(a));
    for (i64 i = 0; i < a; ++i)
        out.push_back(checked_add(a, checked_mul(i, k)));
    return out;
}

bool ap3_symmetric_iff_even(i64 a, i64 k) {
    require_coprime(a, k);
    if (a < 2)
        throw precondition_error("a = 1 gives ℕ, for which the parity criterion does not apply");
    return a % 2 == 0;
}

bool ap3_generators_apply(const Ap3Spec& spec) {
    return spec.d >= 3 && (spec.d % 2 == 0 || spec.s % 2 == 0);
}

NumericalSemigroup ap3_quotient_generators(const Ap3Spec& spec) {
    if (spec.d < 3)
        throw precondition_error("explicit quotient generators need d >= 3, got " + describe(spec));
    const i64 s = spec.s, k = spec.k, t = spec.t;
    if (spec.d % 2 == 1) {
        if (s % 2 != 0)
            throw precondition_error("odd d needs a = sd to be an even multiple of d, got " + describe(spec));
        const i64 ts = checked_mul(t, s);
        return from_generators({s, s + k + ts, s + 2 * k + 2 * ts});
    }
    return from_generators({s, checked_add(k, checked_mul(s, t))});
}

FrobeniusGenus ap3_even_d_invariants(const Ap3Spec& spec) {
    if (spec.d < 4 || spec.d % 2 != 0)
        throw precondition_error("even-d closed form needs an even d >= 4, got " + describe(spec));
    const i64 s = spec.s;
    const i64 width = checked_add(spec.a, checked_mul(2, spec.k));
    const i64 f = divide_exactly(checked_mul(s - 1, width), 2, "even-d Frobenius " + describe(spec)) - s;
    const i64 g = divide_exactly(checked_mul(s - 1, width - 2), 4, "even-d genus " + describe(spec));
    return {f, g};
}

FrobeniusGenus ap3_odd_a_invariants(const Ap3Spec& spec) {
    if (spec.a % 2 == 0)
        throw precondition_error("odd-a closed form needs a odd, got " + describe(spec));
    if (spec.d % 2 == 0 || spec.s % 2 == 0)
        throw invariant_violation("odd a must force odd d and odd s " + describe(spec));
    const i64 s = spec.s, k = spec.k, t = spec.t;
    const std::string tag = describe(spec);

    // 2F = ((s-1)·2t + (s-1))·s + 2(s-1)k - 2s
    const i64 twice_f = checked_sub(
        checked_add(checked_mul(checked_add(checked_mul(s - 1, 2 * t), s - 1), s), checked_mul(2, s - 1, k)),
        2 * s);
    // 4g = 2s(s-1)t + (s^2-1) + 2(s-1)k - 2(s-1)
    const i64 four_g = checked_sub(checked_add(checked_add(checked_mul(2, s, s - 1, t), checked_mul(s, s) - 1),
                                               checked_mul(2, s - 1, k)),
                                   2 * (s - 1));
    const i64 f = divide_exactly(twice_f, 2, "odd-a Frobenius " + tag);
    const i64 g = divide_exactly(four_g, 4, "odd-a genus " + tag);
    if (2 * g - f != (s + 1) / 2)
        throw theorem_violation("2g - F = " + std::to_string(2 * g - f) + " but (s+1)/2 = " +
                                std::to_string((s + 1) / 2) + " for " + tag);
    return {f, g};
}

NumericalSemigroup full_ap_quotient(const FullApSpec& spec, i64 d) {
    if (d < 1 || spec.a % d != 0)
        throw precondition_error("d = " + std::to_string(d) + " must divide a = " + std::to_string(spec.a));
    const i64 s = spec.a / d;
    std::vector<i64> gens;
    gens.reserve(static_cast<std::size_t>(s));
    for (i64 i = 0; i < s; ++i)
        gens.push_back(checked_add(s, checked_mul(i, spec.k)));
    return from_generators(gens);
}

FrobeniusGenus full_ap_divisor_identity(const FullApSpec& spec, i64 d) {
    if (d < 1 || spec.a % d != 0)
        throw precondition_error("d = " + std::to_string(d) + " must divide a = " + std::to_string(spec.a));
    const i64 s = spec.a / d;
    if (s < 2)
        throw precondition_error("d = a gives the trivial quotient ℕ (F = -1, g = 0); the identity needs s >= 2");
    const i64 f = checked_mul(spec.k, s - 1);
    const i64 g = divide_exactly(checked_mul(spec.k + 1, s - 1), 2, "full progression genus");
    if (2 * g != f + s - 1)
        throw theorem_violation("g = (F + s - 1)/2 fails: g = " + std::to_string(g) + ", F = " + std::to_string(f));
    return {f, g};
}

FrobeniusGenus full_ap_d_divides_k(const FullApSpec& spec, i64 d) {
    if (d < 1 || spec.k % d != 0)
        throw precondition_error("d = " + std::to_string(d) + " must divide k = " + std::to_string(spec.k));
    if (spec.a < 2)
        throw precondition_error("a >= 2 required");
    const i64 f = divide_exactly(checked_mul(spec.a - 1, spec.k), d, "full progression Frobenius");
    const i64 g = divide_exactly(checked_mul(spec.a - 1, spec.k / d + 1), 2, "full progression genus");
    if (2 * g != f + spec.a - 1)
        throw theorem_violation("g = (F + a - 1)/2 fails: g = " + std::to_string(g) + ", F = " + std::to_string(f));
    return {f, g};
}

std::vector<OpenProblemRow> open_problem_sweep(i64 a, i64 k, i64 ell, i64 d_min, i64 d_max) {
    require_coprime(a, k);
    if (ell < 3 || ell > a - 2)
        throw precondition_error("need 3 <= ell <= a - 2, got ell = " + std::to_string(ell));
    if (d_min < 1 || d_max < d_min)
        throw precondition_error("d range must satisfy 1 <= d_min <= d_max");
    std::vector<i64> gens;
    for (i64 i = 0; i <= ell; ++i)
        gens.push_back(checked_add(a, checked_mul(i, k)));
    const auto s = from_generators(gens);
    std::vector<OpenProblemRow> rows;
    for (i64 d = d_min; d <= d_max; ++d) {
        const auto q = quotient(s, d);
        rows.push_back({d, q.frobenius(), q.genus(), 2 * q.genus() - q.frobenius()});
    }
    return rows;
}

} // namespace nsg
