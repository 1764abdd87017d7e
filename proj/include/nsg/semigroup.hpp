#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nsg/checked.hpp"

namespace nsg {

/// Ap(S, n): entry r is the smallest element of S congruent to r modulo n.
struct AperySet {
    i64 modulus = 1;
    std::vector<i64> elements{0};

    friend bool operator==(const AperySet&, const AperySet&) = default;
};

/// Gap counts per residue class modulo d: counts[i] = |{gaps s : s ≡ i mod d}|.
struct GapClassCounts {
    i64 d = 1;
    std::vector<i64> counts;

    friend bool operator==(const GapClassCounts&, const GapClassCounts&) = default;
};

/// A numerical semigroup in canonical form.
///
/// Instances are immutable and are only produced by `from_generators`,
/// `from_membership` or `from_apery`, which all compute the unique minimal
/// generating system together with the gap set. Membership queries go
/// through the Apéry set of the multiplicity, so `contains` is O(1).
class NumericalSemigroup {
public:
    /// The whole of ℕ.
    NumericalSemigroup();

    const std::vector<i64>& minimal_generators() const noexcept { return generators_; }
    i64 multiplicity() const noexcept { return generators_.front(); }
    i64 embedding_dimension() const noexcept { return static_cast<i64>(generators_.size()); }
    /// -1 exactly when the semigroup is ℕ.
    i64 frobenius() const noexcept { return frobenius_; }
    i64 conductor() const noexcept { return frobenius_ + 1; }
    i64 genus() const noexcept { return static_cast<i64>(gaps_.size()); }
    const std::vector<i64>& gaps() const noexcept { return gaps_; }
    /// Ap(S, multiplicity).
    const AperySet& apery() const noexcept { return apery_; }

    bool is_whole() const noexcept { return frobenius_ == -1; }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ == b.generators_;
    }

private:
    friend NumericalSemigroup from_apery(AperySet ap);

    std::vector<i64> generators_;
    i64 frobenius_ = -1;
    std::vector<i64> gaps_;
    AperySet apery_;
};

/// Upper bound on the number of gaps (and Apéry entries) the library will
/// materialize; larger inputs are rejected with a precondition_error.
inline constexpr i64 max_materialized_size = i64{1} << 26;

/// Builds the semigroup generated by `gens`.
///
/// Duplicates are dropped silently. Throws precondition_error for an empty
/// list, a non-positive entry, or gcd(gens) != 1.
NumericalSemigroup from_generators(std::span<const i64> gens);
inline NumericalSemigroup from_generators(std::initializer_list<i64> gens) {
    return from_generators(std::span<const i64>(gens.begin(), gens.size()));
}

/// Builds a semigroup from a membership predicate that is known to hold for
/// every x >= tail_start. The predicate is only queried on [0, tail_start).
/// The predicate is trusted to describe a semigroup; use
/// `first_closure_violation` to check that separately.
NumericalSemigroup from_membership(const std::function<bool(i64)>& member, i64 tail_start);

/// Builds a semigroup from a valid Apéry set of its multiplicity (or of any
/// element n). Throws invariant_violation when the set is not consistent.
NumericalSemigroup from_apery(AperySet ap);

bool contains(const NumericalSemigroup& s, i64 x);

/// Ap(S, n) by round-robin shortest-path relaxation over the residues mod n.
/// Throws precondition_error("Apéry modulus must lie in S") when n ∉ S.
AperySet apery_set(const NumericalSemigroup& s, i64 n);

struct FrobeniusGenus {
    i64 frobenius = -1;
    i64 genus = 0;

    friend bool operator==(const FrobeniusGenus&, const FrobeniusGenus&) = default;
};

/// Selmer's formulas: F = max(Ap) - n and g = (1/n) sum(Ap) - (n-1)/2.
FrobeniusGenus invariants_from_apery(const AperySet& ap);

/// First positive multiple n of d that is a gap while F(S) - n is not in S.
std::optional<i64> d_symmetry_violation(const NumericalSemigroup& s, i64 d);

bool is_d_symmetric(const NumericalSemigroup& s, i64 d);
inline bool is_symmetric(const NumericalSemigroup& s) { return is_d_symmetric(s, 1); }

/// Coefficients of P_S(x) = 1 - (1 - x) * sum_{gaps} x^s, lowest degree first.
std::vector<i64> semigroup_polynomial_coeffs(const NumericalSemigroup& s);

/// Pairs (x, y) in a window [0, limit] with x, y ∈ S but x + y ∉ S. Used to
/// validate membership predicates fed to `from_membership`.
std::optional<std::pair<i64, i64>> first_closure_violation(const std::function<bool(i64)>& member,
                                                           i64 limit);

} // namespace nsg
