#pragma once

// Independent membership oracle: plain coin-change reachability over a window,
// sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

struct Sieve {
    std::vector<char> member; // member[x] for x < member.size()

    bool contains(i64 x) const {
        return x >= static_cast<i64>(member.size()) || member[static_cast<std::size_t>(x)];
    }
};

// Window [0, limit) must extend past the conductor; min*max is always enough.
inline Sieve sieve(const std::vector<i64>& gens) {
    const i64 lo = *std::min_element(gens.begin(), gens.end());
    const i64 hi = *std::max_element(gens.begin(), gens.end());
    const i64 limit = lo * hi + hi + 1;
    Sieve s{std::vector<char>(static_cast<std::size_t>(limit), 0)};
    s.member[0] = 1;
    for (i64 x = 1; x < limit; ++x)
        for (i64 g : gens)
            if (g <= x && s.member[static_cast<std::size_t>(x - g)]) {
                s.member[static_cast<std::size_t>(x)] = 1;
                break;
            }
    return s;
}

struct Invariants {
    i64 frobenius = -1;
    i64 genus = 0;
    std::vector<i64> gaps;
};

template <typename Member>
Invariants invariants(Member member, i64 limit) {
    Invariants out;
    for (i64 x = 1; x < limit; ++x)
        if (!member(x)) {
            out.gaps.push_back(x);
            out.frobenius = x;
        }
    out.genus = static_cast<i64>(out.gaps.size());
    return out;
}

inline Invariants invariants(const std::vector<i64>& gens) {
    const auto s = sieve(gens);
    return invariants([&](i64 x) { return s.contains(x); }, static_cast<i64>(s.member.size()));
}

// Invariants of S/d = {x : dx in S}.
inline Invariants quotient_invariants(const std::vector<i64>& gens, i64 d) {
    const auto s = sieve(gens);
    return invariants([&](i64 x) { return s.contains(d * x); }, static_cast<i64>(s.member.size()) / d + 2);
}

// Minimal generators: members not a sum of two smaller nonzero members.
template <typename Member>
std::vector<i64> minimal_generators(Member member, i64 limit) {
    std::vector<i64> out;
    for (i64 x = 1; x < limit; ++x) {
        if (!member(x))
            continue;
        bool decomposable = false;
        for (i64 y = 1; y <= x / 2 && !decomposable; ++y)
            decomposable = member(y) && member(x - y);
        if (!decomposable)
            out.push_back(x);
    }
    return out;
}

inline std::vector<i64> quotient_generators(const std::vector<i64>& gens, i64 d) {
    const auto s = sieve(gens);
    return minimal_generators([&](i64 x) { return s.contains(d * x); },
                              static_cast<i64>(s.member.size()) / d + 2 + *std::max_element(gens.begin(), gens.end()));
}

} // namespace oracle
