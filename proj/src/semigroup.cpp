#include "nsg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace nsg {
namespace {

constexpr i64 unreached = std::numeric_limits<i64>::max();

void check_size(i64 n, const char* what) {
    if (n > max_materialized_size)
        throw precondition_error(std::string(what) + " of " + std::to_string(n) +
                                 " exceeds the supported size " + std::to_string(max_materialized_size));
}

// Round-robin relaxation: for each weight, walk every cycle of the residue
// graph x -> x + w (mod n) once, starting from the cycle's current minimum. After processing
// a weight, dist holds the Apéry set of <n, weights seen so far>.
std::vector<i64> round_robin_apery(i64 n, std::span<const i64> weights) {
    std::vector<i64> dist(static_cast<std::size_t>(n), unreached);
    dist[0] = 0;
    for (i64 w : weights) {
        i64 step = w % n;
        if (step == 0)
            continue;
        i64 cycles = std::gcd(n, step);
        i64 cycle_len = n / cycles;
        for (i64 start = 0; start < cycles; ++start) {
            i64 best = start;
            for (i64 i = 0, pos = start; i < cycle_len; ++i, pos = (pos + step) % n)
                if (dist[pos] < dist[best])
                    best = pos;
            if (dist[best] == unreached)
                continue;
            i64 pos = best;
            for (i64 i = 1; i < cycle_len; ++i) {
                i64 next = (pos + step) % n;
                i64 via = checked_add(dist[pos], w);
                if (via < dist[next])
                    dist[next] = via;
                pos = next;
            }
        }
    }
    return dist;
}

bool member_by_apery(const std::vector<i64>& ap, i64 m, i64 x) {
    return x >= 0 && x >= ap[static_cast<std::size_t>(x % m)];
}

} // namespace

NumericalSemigroup::NumericalSemigroup() : generators_{1}, frobenius_(-1), apery_{1, {0}} {}

NumericalSemigroup from_apery(AperySet ap) {
    const i64 n = ap.modulus;
    if (n <= 0 || static_cast<i64>(ap.elements.size()) != n)
        throw invariant_violation("Apéry set size does not match its modulus");
    if (ap.elements[0] != 0)
        throw invariant_violation("Apéry set must contain 0 in residue class 0");
    for (i64 r = 0; r < n; ++r) {
        i64 w = ap.elements[static_cast<std::size_t>(r)];
        if (w < 0 || w % n != r)
            throw invariant_violation("Apéry entry " + std::to_string(w) + " is not congruent to " +
                                      std::to_string(r) + " mod " + std::to_string(n));
    }
    // Per-residue minima are closed under addition up to reduction.
    for (i64 i = 1; i < n; ++i)
        for (i64 j = i; j < n; ++j) {
            const i64 wi = ap.elements[static_cast<std::size_t>(i)];
            const i64 wj = ap.elements[static_cast<std::size_t>(j)];
            if (checked_add(wi, wj) < ap.elements[static_cast<std::size_t>((i + j) % n)])
                throw invariant_violation("Apéry set not closed: " + std::to_string(wi) + " + " +
                                          std::to_string(wj) + " undercuts its residue class");
        }

    NumericalSemigroup s;
    if (n == 1)
        return s;

    i64 m = n;
    for (i64 r = 1; r < n; ++r)
        m = std::min(m, ap.elements[static_cast<std::size_t>(r)]);

    if (m == 1)
        return s;

    std::vector<i64> apm;
    if (m == n) {
        apm = std::move(ap.elements);
    } else {
        std::vector<i64> gens(ap.elements.begin() + 1, ap.elements.end());
        gens.push_back(n);
        apm = round_robin_apery(m, gens);
    }

    // w ∈ Ap(S,m)\{0} is a minimal generator iff it is not w' + (w - w') with
    // w' a smaller nonzero Apéry element and w - w' ∈ S.
    std::vector<i64> sorted_ap(apm.begin() + 1, apm.end());
    std::sort(sorted_ap.begin(), sorted_ap.end());
    std::vector<i64> gens{m};
    for (i64 w : sorted_ap) {
        bool decomposable = false;
        for (i64 wp : sorted_ap) {
            if (wp >= w)
                break;
            if (member_by_apery(apm, m, w - wp)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            gens.push_back(w);
    }

    i64 sum = 0;
    i64 top = 0;
    for (i64 w : apm) {
        sum = checked_add(sum, w);
        top = std::max(top, w);
    }
    i64 frobenius = top - m;
    i64 genus = exact_div(checked_sub(checked_mul(2, sum), checked_mul(m, m - 1)), 2 * m,
                          "Selmer genus (corrupted Apéry set)");
    check_size(genus, "genus");

    s.gaps_.clear();
    s.gaps_.reserve(static_cast<std::size_t>(genus));
    for (i64 x = 1; x <= frobenius; ++x)
        if (!member_by_apery(apm, m, x))
            s.gaps_.push_back(x);
    if (static_cast<i64>(s.gaps_.size()) != genus)
        throw invariant_violation("gap enumeration disagrees with Selmer genus");

    s.generators_ = std::move(gens);
    s.frobenius_ = frobenius;
    s.apery_ = AperySet{m, std::move(apm)};
    return s;
}

NumericalSemigroup from_generators(std::span<const i64> input) {
    if (input.empty())
        throw precondition_error("generator list must be nonempty");
    std::vector<i64> gens(input.begin(), input.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() <= 0)
        throw precondition_error("generators must be positive integers");
    i64 g = 0;
    for (i64 x : gens)
        g = std::gcd(g, x);
    if (g != 1)
        throw precondition_error("not a numerical semigroup (infinite complement): gcd of generators is " +
                                 std::to_string(g));

    const i64 m = gens.front();
    check_size(m, "multiplicity");
    return from_apery(AperySet{m, round_robin_apery(m, gens)});
}

NumericalSemigroup from_membership(const std::function<bool(i64)>& member, i64 tail_start) {
    if (tail_start <= 1)
        return {};
    i64 m = tail_start;
    for (i64 x = 1; x < tail_start; ++x) {
        if (member(x)) {
            m = x;
            break;
        }
    }
    check_size(m, "multiplicity");
    std::vector<i64> ap(static_cast<std::size_t>(m));
    for (i64 r = 0; r < m; ++r) {
        i64 x = r;
        while (x < tail_start && !member(x))
            x += m;
        ap[static_cast<std::size_t>(r)] = x;
    }
    return from_apery(AperySet{m, std::move(ap)});
}

bool contains(const NumericalSemigroup& s, i64 x) {
    const AperySet& ap = s.apery();
    return member_by_apery(ap.elements, ap.modulus, x);
}

AperySet apery_set(const NumericalSemigroup& s, i64 n) {
    if (n <= 0 || !contains(s, n))
        throw precondition_error("Apéry modulus must lie in S (got " + std::to_string(n) + ")");
    if (n == s.multiplicity())
        return s.apery();
    check_size(n, "Apéry modulus");
    return AperySet{n, round_robin_apery(n, s.minimal_generators())};
}

FrobeniusGenus invariants_from_apery(const AperySet& ap) {
    const i64 n = ap.modulus;
    if (n <= 0 || static_cast<i64>(ap.elements.size()) != n)
        throw invariant_violation("Apéry set size does not match its modulus");
    i64 sum = 0;
    i64 top = 0;
    for (i64 w : ap.elements) {
        sum = checked_add(sum, w);
        top = std::max(top, w);
    }
    i64 genus = exact_div(checked_sub(checked_mul(2, sum), checked_mul(n, n - 1)), checked_mul(2, n),
                          "Selmer genus (corrupted Apéry set)");
    return {top - n, genus};
}

std::optional<i64> d_symmetry_violation(const NumericalSemigroup& s, i64 d) {
    if (d < 1)
        throw precondition_error("symmetry divisor must be positive");
    for (i64 gap : s.gaps())
        if (gap % d == 0 && !contains(s, s.frobenius() - gap))
            return gap;
    return std::nullopt;
}

bool is_d_symmetric(const NumericalSemigroup& s, i64 d) {
    return !d_symmetry_violation(s, d).has_value();
}

std::vector<i64> semigroup_polynomial_coeffs(const NumericalSemigroup& s) {
    if (s.is_whole())
        return {1};
    std::vector<i64> c(static_cast<std::size_t>(s.frobenius() + 2), 0);
    c[0] = 1;
    for (i64 gap : s.gaps()) {
        c[static_cast<std::size_t>(gap)] -= 1;
        c[static_cast<std::size_t>(gap + 1)] += 1;
    }
    return c;
}

std::optional<std::pair<i64, i64>> first_closure_violation(const std::function<bool(i64)>& member,
                                                           i64 limit) {
    std::vector<char> in(static_cast<std::size_t>(limit + 1));
    std::vector<i64> elems;
    for (i64 x = 0; x <= limit; ++x) {
        in[static_cast<std::size_t>(x)] = member(x) ? 1 : 0;
        if (in[static_cast<std::size_t>(x)] && x > 0)
            elems.push_back(x);
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            i64 sum = elems[i] + elems[j];
            if (sum > limit)
                break;
            if (!in[static_cast<std::size_t>(sum)])
                return std::pair{elems[i], elems[j]};
        }
    }
    return std::nullopt;
}

} // namespace nsg
