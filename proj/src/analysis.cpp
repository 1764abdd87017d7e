#include "nsg/analysis.hpp"

#include "nsg/progressions.hpp"
#include "nsg/quotient.hpp"
#include "nsg/roots.hpp"

namespace nsg {

std::optional<ProgressionShape> progression_shape(const NumericalSemigroup& s) {
    const auto& g = s.minimal_generators();
    if (g.size() < 2)
        return std::nullopt;
    const i64 k = g[1] - g[0];
    for (std::size_t i = 2; i < g.size(); ++i)
        if (g[i] - g[i - 1] != k)
            return std::nullopt;
    ProgressionShape shape{g[0], k, g.size() == 3, static_cast<i64>(g.size()) == g[0]};
    if (!shape.three_term && !shape.full)
        return std::nullopt;
    return shape;
}

QuotientReport analyze_quotient(const NumericalSemigroup& s, i64 d) {
    QuotientReport report{s, d, quotient(s, d), -1, 0, {}};
    report.frobenius_bruteforce = report.quotient.frobenius();
    report.genus_bruteforce = report.quotient.genus();
    const i64 f = report.frobenius_bruteforce;
    const i64 g = report.genus_bruteforce;
    auto& out = report.formula_results;

    {
        FormulaResult r{"genus", {}, {g}, {}};
        try {
            r.predicted = {genus_quotient_via_roots(s, d)};
        } catch (const numerical_failure& e) {
            r.note = e.what();
        }
        out["roots-of-unity"] = r;
    }

    if (!s.is_whole() && is_d_symmetric(s, d))
        out["strazzanti"] = {"frobenius", {frobenius_quotient_dsymmetric(s, d)}, {f}, {}};

    if (s.embedding_dimension() == 2) {
        const i64 a = s.minimal_generators()[0];
        const i64 b = s.minimal_generators()[1];
        if (ed2_closed_form_applies(a, b, d))
            out["ed2-closed-form"] = {"genus", {genus_quotient_ed2_closed_form(a, b, d)}, {g}, {}};
    }

    auto add_fg = [&](const char* name, auto&& formula) {
        FormulaResult r{"frobenius+genus", {}, {f, g}, {}};
        try {
            const FrobeniusGenus fg = formula();
            r.predicted = {fg.frobenius, fg.genus};
        } catch (const theorem_violation& e) {
            r.note = e.what();
        }
        out[name] = r;
    };

    const auto shape = progression_shape(s);
    if (!shape)
        return report;

    if (shape->three_term && shape->a % d == 0) {
        const auto spec = Ap3Spec::make(shape->a, shape->k, d);
        if (ap3_generators_apply(spec))
            out["ap3-generators"] = {"generators", ap3_quotient_generators(spec).minimal_generators(),
                                     report.quotient.minimal_generators(), {}};
        if (d >= 4 && d % 2 == 0)
            add_fg("ap3-even-d", [&] { return ap3_even_d_invariants(spec); });
        if (shape->a % 2 == 1)
            add_fg("ap3-odd-a", [&] { return ap3_odd_a_invariants(spec); });
    }

    if (shape->full) {
        const auto spec = FullApSpec::make(shape->a, shape->k);
        if (spec.a % d == 0 && spec.a / d >= 2)
            add_fg("full-ap", [&] { return full_ap_divisor_identity(spec, d); });
        if (spec.k % d == 0 && spec.a >= 2)
            add_fg("full-ap-dk", [&] { return full_ap_d_divides_k(spec, d); });
    }
    return report;
}

} // namespace nsg
