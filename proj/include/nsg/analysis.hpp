#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// One closed-form prediction about S/d next to its brute-force counterpart.
/// Scalars are one-element vectors, (F, g) pairs two elements, generator
/// predictions the minimal generating set.
struct FormulaResult {
    std::string quantity; // "genus", "frobenius", "frobenius+genus" or "generators"
    std::vector<i64> predicted;
    std::vector<i64> oracle;
    std::string note;     // set when the formula could not be evaluated

    bool matches() const { return note.empty() && predicted == oracle; }
};

struct QuotientReport {
    NumericalSemigroup base;
    i64 divisor = 1;
    NumericalSemigroup quotient;
    i64 frobenius_bruteforce = -1;
    i64 genus_bruteforce = 0;
    /// Keyed by formula id: roots-of-unity, strazzanti, ed2-closed-form,
    /// ap3-generators, ap3-even-d, ap3-odd-a, full-ap, full-ap-dk.
    std::map<std::string, FormulaResult> formula_results;

    bool all_match() const {
        for (const auto& [name, r] : formula_results)
            if (!r.matches())
                return false;
        return true;
    }
};

/// Progression shape read off the minimal generators.
struct ProgressionShape {
    i64 a = 0;
    i64 k = 0;
    bool three_term = false; // minimal generators are exactly a, a+k, a+2k
    bool full = false;       // minimal generators are a, a+k, ..., a+(a-1)k
};

std::optional<ProgressionShape> progression_shape(const NumericalSemigroup& s);

/// Computes S/d by brute force and every closed form whose hypotheses hold.
QuotientReport analyze_quotient(const NumericalSemigroup& s, i64 d);

} // namespace nsg
