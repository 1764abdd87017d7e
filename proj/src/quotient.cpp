#include "nsg/quotient.hpp"

#include <string>

namespace nsg {

NumericalSemigroup quotient(const NumericalSemigroup& s, i64 d) {
    if (d < 1)
        throw precondition_error("quotient divisor must be positive");
    if (d == 1)
        return s;
    if (s.is_whole() || contains(s, d))
        return {};
    // d·x > F(S) forces x ∈ S/d, so only [0, F(S)/d] needs a membership test.
    const i64 tail = s.frobenius() / d + 1;
    return from_membership([&](i64 x) { return contains(s, checked_mul(d, x)); }, tail);
}

i64 dsymmetric_witness(const NumericalSemigroup& s, i64 d) {
    if (d < 1)
        throw precondition_error("quotient divisor must be positive");
    if (s.is_whole())
        throw precondition_error("S = ℕ has no Frobenius number to reduce");
    i64 x = mod_floor(s.frobenius(), d);
    while (!contains(s, x))
        x = checked_add(x, d);
    return x;
}

i64 frobenius_quotient_dsymmetric(const NumericalSemigroup& s, i64 d) {
    if (d < 1)
        throw precondition_error("quotient divisor must be positive");
    if (auto bad = d_symmetry_violation(s, d))
        throw precondition_error("S is not " + std::to_string(d) + "-symmetric: gap " + std::to_string(*bad) +
                                 " has F(S) - " + std::to_string(*bad) + " = " +
                                 std::to_string(s.frobenius() - *bad) + " outside S");
    const i64 x = dsymmetric_witness(s, d);
    return exact_div(s.frobenius() - x, d, "d-symmetric Frobenius reduction");
}

GapClassCounts gap_class_counts(const NumericalSemigroup& s, i64 d) {
    if (d < 1)
        throw precondition_error("residue modulus must be positive");
    GapClassCounts out{d, std::vector<i64>(static_cast<std::size_t>(d), 0)};
    for (i64 gap : s.gaps())
        ++out.counts[static_cast<std::size_t>(gap % d)];
    return out;
}

} // namespace nsg
