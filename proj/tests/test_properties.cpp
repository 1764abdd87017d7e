#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gen.hpp"
#include "nsg/quotient.hpp"
#include "nsg/rational.hpp"
#include "nsg/roots.hpp"
#include "nsg/verify.hpp"
#include "oracle.hpp"

using namespace nsg;

TEST_CASE("invariants agree with the reachability oracle") {
    gen::Source src(11);
    for (int iter = 0; iter < 300; ++iter) {
        const auto gens = src.generators(5, 45);
        CAPTURE(gens);
        const auto s = from_generators(gens);
        const auto o = oracle::invariants(gens);
        CHECK(s.frobenius() == o.frobenius);
        CHECK(s.genus() == o.genus);
        CHECK(s.gaps() == o.gaps);
        const auto sv = oracle::sieve(gens);
        for (i64 x = 0; x < static_cast<i64>(sv.member.size()); ++x)
            REQUIRE(contains(s, x) == sv.contains(x));
        CHECK(s.minimal_generators() ==
              oracle::minimal_generators([&](i64 x) { return sv.contains(x); }, static_cast<i64>(sv.member.size())));
    }
}

TEST_CASE("generator order and redundancy do not matter") {
    gen::Source src(12);
    for (int iter = 0; iter < 200; ++iter) {
        auto gens = src.generators(4, 40);
        const auto s = from_generators(gens);
        std::shuffle(gens.begin(), gens.end(), src.engine());
        gens.push_back(gens[0] + gens[1]);
        CHECK(from_generators(gens) == s);
    }
}

TEST_CASE("Apery sets at any element give the same semigroup") {
    gen::Source src(13);
    for (int iter = 0; iter < 200; ++iter) {
        const auto s = from_generators(src.generators(4, 40));
        for (i64 n : {s.multiplicity(), s.minimal_generators().back(), s.conductor() + 3}) {
            const auto ap = apery_set(s, n);
            CHECK(invariants_from_apery(ap) == FrobeniusGenus{s.frobenius(), s.genus()});
            CHECK(from_apery(ap) == s);
        }
    }
}

TEST_CASE("semigroup polynomial and symmetry") {
    gen::Source src(14);
    for (int iter = 0; iter < 300; ++iter) {
        const auto s = from_generators(src.generators(4, 40));
        const auto p = semigroup_polynomial_coeffs(s);
        i64 at_one = 0;
        for (i64 c : p)
            at_one += c;
        CHECK(at_one == 1);
        CHECK(is_symmetric(s) == (2 * s.genus() == s.frobenius() + 1));
    }
}

TEST_CASE("d-symmetry matches its definition") {
    gen::Source src(15);
    for (int iter = 0; iter < 200; ++iter) {
        const auto s = from_generators(src.generators(4, 30));
        for (i64 d = 1; d <= 6; ++d) {
            bool expected = true;
            for (i64 n = d; n <= s.frobenius(); n += d)
                if (!contains(s, n) && !contains(s, s.frobenius() - n))
                    expected = false;
            CHECK(is_d_symmetric(s, d) == expected);
        }
    }
}

TEST_CASE("quotients: membership, oracle and composition") {
    gen::Source src(16);
    for (int iter = 0; iter < 200; ++iter) {
        const auto gens = src.generators(4, 40);
        const auto s = from_generators(gens);
        const i64 d = src.range(1, 9);
        const i64 e = src.range(1, 5);
        const auto q = quotient(s, d);
        for (i64 x = 0; x <= s.conductor() + 2; ++x)
            REQUIRE(contains(q, x) == contains(s, d * x));
        const auto o = oracle::quotient_invariants(gens, d);
        CHECK(q.frobenius() == o.frobenius);
        CHECK(q.genus() == o.genus);
        CHECK(q.minimal_generators() == oracle::quotient_generators(gens, d));
        CHECK(quotient(q, e) == quotient(s, d * e));
        CHECK(q.genus() <= s.genus());
    }
}

TEST_CASE("roots-of-unity genus is real and matches brute force") {
    gen::Source src(17);
    for (int iter = 0; iter < 200; ++iter) {
        const auto gens = src.generators(4, 60);
        const auto s = from_generators(gens);
        const i64 d = src.range(2, 15);
        const auto r = evaluate_genus_quotient_via_roots(s, d);
        CHECK(r.genus == oracle::quotient_invariants(gens, d).genus);
        CHECK(r.imaginary < 1e-9);
        CHECK(r.residual < 1e-6);
    }
}

TEST_CASE("two-generator closed form against the oracle") {
    gen::Source src(18);
    int checked = 0;
    while (checked < 300) {
        auto [a, b] = src.coprime_pair(1, 70);
        const i64 d = src.range(2, 15);
        if (!ed2_closed_form_applies(a, b, d))
            continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(d);
        CHECK(genus_quotient_ed2_closed_form(a, b, d) == oracle::quotient_invariants({a, b}, d).genus);
        CHECK(ed2_closed_form_value(a, b, d) == genus_quotient_ed2_closed_form(a, b, d));
        ++checked;
    }
}

TEST_CASE("Strazzanti's formula on d-symmetric samples") {
    gen::Source src(19);
    for (int iter = 0; iter < 300; ++iter) {
        const auto gens = src.generators(3, 30);
        const auto s = from_generators(gens);
        const i64 d = src.range(1, 10);
        if (s.is_whole() || !is_d_symmetric(s, d))
            continue;
        CHECK(frobenius_quotient_dsymmetric(s, d) == oracle::quotient_invariants(gens, d).frobenius);
    }
}

TEST_CASE("rational field laws") {
    gen::Source src(20);
    auto draw = [&] { return Rational(src.range(-50, 50), src.range(1, 30)); };
    for (int iter = 0; iter < 2000; ++iter) {
        const auto x = draw(), y = draw(), z = draw();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == Rational(0));
        if (y != Rational(0))
            CHECK(x / y * y == x);
        CHECK(Rational::parse(x.to_string()) == x);
        CHECK(x.den() > 0);
        CHECK(std::gcd(x.num(), x.den()) == 1);
        CHECK((x < y) == (x.num() * y.den() < y.num() * x.den()));
    }
}

TEST_CASE("json round trip is byte-identical for random records") {
    gen::Source src(21);
    for (int iter = 0; iter < 300; ++iter) {
        VerificationRecord r;
        r.theorem = theorem_ids()[static_cast<std::size_t>(src.range(0, 11))];
        r.params = json{{"a", src.range(1, 100)}, {"d", src.range(1, 12)}};
        r.formula = src.coin() ? json(src.range(-5, 50)) : json(Rational(src.range(-9, 9), src.range(1, 9)).to_string());
        r.oracle = json::array({src.range(0, 9), src.range(0, 9)});
        r.status = static_cast<Status>(src.range(0, 2));
        if (src.coin())
            r.residual = static_cast<double>(src.range(0, 1000)) * 1e-12;
        if (src.coin())
            r.note = "note " + std::to_string(iter);
        const auto text = to_json(r).dump();
        const auto back = record_from_json(json::parse(text));
        CHECK(back == r);
        CHECK(to_json(back).dump() == text);
    }
}
