#pragma once

#include "nsg/semigroup.hpp"

namespace nsg {

/// S/d = {x ∈ ℕ : d·x ∈ S}. d = 1 returns S; d ∈ S gives ℕ.
NumericalSemigroup quotient(const NumericalSemigroup& s, i64 d);

/// F(S/d) = (F(S) - x)/d for a d-symmetric S, where x is the smallest element
/// of S congruent to F(S) modulo d.
///
/// x ranges over all of S including 0: when d | F(S) the smallest positive
/// candidate overshoots and the exact answer is F(S)/d, which also makes the
/// d = 1 case return F(S). Throws precondition_error naming the offending gap
/// when S is not d-symmetric, and when S = ℕ.
i64 frobenius_quotient_dsymmetric(const NumericalSemigroup& s, i64 d);

/// The element x used by `frobenius_quotient_dsymmetric`.
i64 dsymmetric_witness(const NumericalSemigroup& s, i64 d);

/// Gap counts per residue class modulo d, by scanning the gap list.
GapClassCounts gap_class_counts(const NumericalSemigroup& s, i64 d);

} // namespace nsg
