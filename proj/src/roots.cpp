#include "nsg/roots.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "nsg/quotient.hpp"

namespace nsg {
namespace {

std::string pair_str(i64 a, i64 b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

std::complex<double> root_power(i64 d, i64 i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(i, d)) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

// P_S coefficients summed by exponent mod d.
std::vector<i64> folded_polynomial(const NumericalSemigroup& s, i64 d) {
    std::vector<i64> folded(static_cast<std::size_t>(d), 0);
    const auto coeffs = semigroup_polynomial_coeffs(s);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        folded[j % static_cast<std::size_t>(d)] += coeffs[j];
    return folded;
}

std::complex<double> hilbert_from_folded(const std::vector<i64>& folded, i64 d, i64 i) {
    const std::complex<double> z = root_power(d, i);
    std::complex<double> acc = 0.0;
    for (auto it = folded.rbegin(); it != folded.rend(); ++it)
        acc = acc * z + static_cast<double>(*it);
    return acc / (1.0 - z);
}

void require_root_args(i64 d, i64 i) {
    if (d < 2)
        throw precondition_error("root-of-unity order must be at least 2");
    if (d > max_materialized_size)
        throw precondition_error("root-of-unity order " + std::to_string(d) + " is too large");
    if (mod_floor(i, d) == 0)
        throw domain_error("H_S has a pole at ζ_d^i = 1 (i = " + std::to_string(i) + ", d = " +
                           std::to_string(d) + ")");
}

bool pairwise_coprime(i64 a, i64 b, i64 d) {
    return std::gcd(a, b) == 1 && std::gcd(a, d) == 1 && std::gcd(b, d) == 1;
}

} // namespace

std::complex<double> hilbert_at_root(const NumericalSemigroup& s, i64 d, i64 i) {
    require_root_args(d, i);
    return hilbert_from_folded(folded_polynomial(s, d), d, i);
}

std::complex<double> root_of_unity_sum(i64 d) {
    if (d < 2)
        throw precondition_error("root-of-unity order must be at least 2");
    std::complex<double> sum = 0.0;
    for (i64 n = 1; n < d; ++n)
        sum += 1.0 / (1.0 - root_power(d, n));
    return sum;
}

double root_of_unity_identity_check(i64 d) {
    const std::complex<double> sum = root_of_unity_sum(d);
    const double half = static_cast<double>(d - 1) / 2.0;
    return std::max(std::abs(sum.real() - half), std::abs(sum.imag()));
}

RootsGenus evaluate_genus_quotient_via_roots(const NumericalSemigroup& s, i64 d, double tolerance) {
    if (d < 1)
        throw precondition_error("quotient divisor must be positive");
    if (d == 1)
        return {s.genus(), 0.0, 0.0};
    require_root_args(d, 1);

    const auto folded = folded_polynomial(s, d);
    std::complex<double> root_sum = 0.0;
    for (i64 i = 1; i < d; ++i)
        root_sum += hilbert_from_folded(folded, d, i);

    const double dd = static_cast<double>(d);
    const std::complex<double> estimate =
        (static_cast<double>(s.genus()) + (dd - 1.0) / 2.0 - root_sum) / dd;
    const double nearest = std::round(estimate.real());
    RootsGenus out{static_cast<i64>(nearest), std::abs(estimate.real() - nearest), std::abs(root_sum.imag())};
    if (out.residual > tolerance || out.imaginary / dd > tolerance)
        throw numerical_failure("roots-of-unity genus estimate " + std::to_string(estimate.real()) +
                                    " is not within " + std::to_string(tolerance) + " of an integer",
                                std::max(out.residual, out.imaginary / dd));
    return out;
}

FrobeniusGenus sylvester_invariants(i64 a, i64 b) {
    if (a < 1 || b < 1)
        throw precondition_error("Sylvester invariants need positive a and b");
    if (std::gcd(a, b) != 1)
        throw precondition_error("Sylvester invariants need coprime a and b, got " + pair_str(a, b));
    const i64 ab = checked_mul(a, b);
    return {ab - a - b, exact_div(checked_mul(a - 1, b - 1), 2, "Sylvester genus")};
}

bool ed2_closed_form_applies(i64 a, i64 b, i64 d) {
    return a >= 1 && b >= 1 && d >= 2 && pairwise_coprime(a, b, d);
}

namespace {

i64 ed2_expression(i64 a, i64 b, i64 d) {
    const i64 a_inv = mod_inverse(a, d);
    const i64 q = (a - 1) / d;
    const i64 inv_b = checked_mul(a_inv, b);

    // 2d * [(a-1)(b+d-a*ab)/(2d) + q(a*bq + a*b - 2)/2]
    const i64 first = checked_mul(a - 1, checked_sub(checked_add(b, d), checked_mul(inv_b, a)));
    const i64 second = checked_mul(d, q, checked_add(checked_mul(inv_b, q), inv_b - 2));
    i64 total = exact_div(checked_add(first, second), checked_mul(2, d),
                          "closed-form genus is not an integer");

    for (i64 j = 1; j < a; ++j)
        if (j % d != 0)
            total = checked_add(total, checked_mul(inv_b, j) / d);
    return total;
}

} // namespace

i64 genus_quotient_ed2_closed_form(i64 a, i64 b, i64 d) {
    if (a < 1 || b < 1 || d < 2)
        throw precondition_error("closed form needs a, b >= 1 and d >= 2");
    if (!pairwise_coprime(a, b, d))
        throw precondition_error("closed form needs a, b, d pairwise coprime, got a=" + std::to_string(a) +
                                 " b=" + std::to_string(b) + " d=" + std::to_string(d));
    return ed2_expression(a, b, d);
}

std::optional<i64> ed2_closed_form_value(i64 a, i64 b, i64 d) {
    if (a < 1 || b < 1 || d < 2 || std::gcd(a, d) != 1)
        return std::nullopt;
    try {
        return ed2_expression(a, b, d);
    } catch (const invariant_violation&) {
        return std::nullopt;
    }
}

Rational cabd_offset(i64 a, i64 b, i64 d) {
    if (d < 1)
        throw precondition_error("quotient divisor must be positive");
    const auto s = from_generators({a, b});
    const i64 g = quotient(s, d).genus();
    return Rational(g) - Rational(checked_mul(a - 1, b - 1), checked_mul(2, d));
}

Rational extract_cabd_constant(i64 a_class, i64 b_class, i64 d, const std::vector<std::pair<i64, i64>>& samples) {
    if (d < 1)
        throw precondition_error("quotient divisor must be positive");
    if (samples.size() < 2)
        throw precondition_error("at least two samples are needed to test constancy");
    const i64 ra = mod_floor(a_class, d);
    const i64 rb = mod_floor(b_class, d);
    for (auto [a, b] : samples) {
        if (a < 1 || b < 1 || mod_floor(a, d) != ra || mod_floor(b, d) != rb)
            throw precondition_error("sample " + pair_str(a, b) + " is not in class " + pair_str(ra, rb) +
                                     " mod " + std::to_string(d));
        if (!pairwise_coprime(a, b, d))
            throw precondition_error("sample " + pair_str(a, b) + " is not pairwise coprime with d = " +
                                     std::to_string(d));
    }
    const Rational first = cabd_offset(samples[0].first, samples[0].second, d);
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const Rational here = cabd_offset(samples[i].first, samples[i].second, d);
        if (here != first)
            throw theorem_violation("C_{a,b,d} is not constant on class " + pair_str(ra, rb) + " mod " +
                                    std::to_string(d) + ": " + pair_str(samples[0].first, samples[0].second) +
                                    " gives " + first.to_string() + " but " +
                                    pair_str(samples[i].first, samples[i].second) + " gives " + here.to_string());
    }
    return first;
}

std::vector<std::pair<i64, i64>> cabd_admissible_pairs(i64 a_class, i64 b_class, i64 d, i64 max_ab) {
    std::vector<std::pair<i64, i64>> out;
    if (d < 1)
        throw precondition_error("quotient divisor must be positive");
    const i64 ra = mod_floor(a_class, d);
    const i64 rb = mod_floor(b_class, d);
    for (i64 a = ra == 0 ? d : ra; a <= max_ab; a += d)
        for (i64 b = rb == 0 ? d : rb; b <= max_ab; b += d)
            if (pairwise_coprime(a, b, d))
                out.emplace_back(a, b);
    return out;
}

std::tuple<Rational, Rational, Rational> lagrange_quadratic(const std::pair<i64, i64>& p0,
                                                            const std::pair<i64, i64>& p1,
                                                            const std::pair<i64, i64>& p2) {
    const std::pair<i64, i64> pts[3] = {p0, p1, p2};
    Rational c2, c1, c0;
    for (int i = 0; i < 3; ++i) {
        const i64 xj = pts[(i + 1) % 3].first;
        const i64 xk = pts[(i + 2) % 3].first;
        const i64 xi = pts[i].first;
        if (xi == xj || xi == xk)
            throw precondition_error("interpolation nodes must be distinct");
        // y_i (x - xj)(x - xk) / ((xi - xj)(xi - xk))
        const Rational w(pts[i].second, checked_mul(xi - xj, xi - xk));
        c2 += w;
        c1 -= w * Rational(checked_add(xj, xk));
        c0 += w * Rational(checked_mul(xj, xk));
    }
    return {c2, c1, c0};
}

std::vector<i64> quasipolynomial_classes(i64 k, i64 d) {
    if (k < 1 || d < 1)
        throw precondition_error("k and d must be positive");
    const i64 shared = std::gcd(d, k);
    std::vector<i64> out;
    for (i64 r = 0; r < d; ++r)
        if (std::gcd(r, shared) == 1)
            out.push_back(r);
    return out;
}

QuasipolynomialFit fit_quasipolynomial(i64 k, i64 d, i64 a_min, i64 a_max) {
    if (a_min < 1 || a_max < a_min)
        throw precondition_error("a range must satisfy 1 <= a_min <= a_max");
    QuasipolynomialFit fit{d, k, {}};
    const Rational leading(1, checked_mul(2, d));
    const Rational base_linear(k - 2, checked_mul(2, d));
    const Rational base_constant(-(k - 1), checked_mul(2, d));

    for (i64 r : quasipolynomial_classes(k, d)) {
        ClassFit cls;
        cls.residue = r;
        cls.pairwise_coprime_class = std::gcd(r, d) == 1 && std::gcd(mod_floor(r + k, d), d) == 1;
        i64 first = a_min + mod_floor(r - a_min, d);
        for (i64 a = first; a <= a_max; a += d) {
            if (std::gcd(a, k) != 1)
                continue;
            const auto s = from_generators({a, checked_add(a, k)});
            cls.samples.emplace_back(a, quotient(s, d).genus());
        }
        if (cls.samples.size() < 4)
            throw precondition_error("class a ≡ " + std::to_string(r) + " (mod " + std::to_string(d) + ") has only " +
                                     std::to_string(cls.samples.size()) + " samples in [" + std::to_string(a_min) +
                                     ", " + std::to_string(a_max) + "]; need at least 4");

        std::tie(cls.c2, cls.c1, cls.c0) = lagrange_quadratic(cls.samples[0], cls.samples[1], cls.samples[2]);
        if (cls.c2 != leading)
            throw theorem_violation("leading coefficient " + cls.c2.to_string() + " on class " + std::to_string(r) +
                                    " mod " + std::to_string(d) + " (k = " + std::to_string(k) + "), expected " +
                                    leading.to_string());
        for (std::size_t i = 3; i < cls.samples.size(); ++i) {
            auto [a, g] = cls.samples[i];
            if (cls.evaluate(a) != Rational(g))
                throw theorem_violation("quadratic on class " + std::to_string(r) + " mod " + std::to_string(d) +
                                        " predicts " + cls.evaluate(a).to_string() + " at a = " + std::to_string(a) +
                                        " but the genus is " + std::to_string(g));
        }

        // g - (a-1)(a+k-1)/(2d) = (c1 - (k-2)/(2d)) a + (c0 + (k-1)/(2d))
        const Rational drift = cls.c1 - base_linear;
        if (drift == Rational(0))
            cls.cabd_constant = cls.c0 - base_constant;
        else if (cls.pairwise_coprime_class)
            throw theorem_violation("g - (a-1)(b-1)/(2d) drifts linearly (" + drift.to_string() +
                                    " per unit a) on pairwise coprime class " + std::to_string(r) + " mod " +
                                    std::to_string(d));
        fit.per_class.push_back(std::move(cls));
    }
    return fit;
}

} // namespace nsg
