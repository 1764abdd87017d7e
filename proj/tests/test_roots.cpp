#include <doctest.h>

#include <cmath>

#include "nsg/roots.hpp"

using namespace nsg;

TEST_CASE("Hilbert series at roots of unity") {
    const auto s = from_generators({3, 5});
    CHECK_THROWS_AS(hilbert_at_root(s, 2, 0), domain_error);
    CHECK_THROWS_AS(hilbert_at_root(s, 2, 4), domain_error);
    CHECK_THROWS_AS(hilbert_at_root(s, 1, 1), precondition_error);
    // For S = N, H(x) = 1/(1-x); at x = -1 that is 1/2.
    const auto h = hilbert_at_root(NumericalSemigroup(), 2, 1);
    CHECK(h.real() == doctest::Approx(0.5));
    CHECK(std::abs(h.imag()) < 1e-12);
}

TEST_CASE("root of unity identity") {
    for (i64 d : {2, 3, 7, 100, 1000})
        CHECK(root_of_unity_identity_check(d) < 1e-9);
    CHECK(root_of_unity_sum(2).real() == doctest::Approx(0.5));
}

TEST_CASE("genus of quotients through roots of unity") {
    CHECK(genus_quotient_via_roots(from_generators({3, 5}), 2) == 2);
    CHECK(genus_quotient_via_roots(from_generators({6, 7, 8}), 3) == 2);
    CHECK(genus_quotient_via_roots(from_generators({15, 17, 19}), 5) == 9);
    CHECK(genus_quotient_via_roots(from_generators({3, 5}), 1) == 4);
    CHECK(genus_quotient_via_roots(NumericalSemigroup(), 5) == 0);
    const auto r = evaluate_genus_quotient_via_roots(from_generators({12, 13, 14}), 4);
    CHECK(r.genus == 6);
    CHECK(r.residual < 1e-6);
    CHECK(r.imaginary < 1e-9);
}

TEST_CASE("Sylvester") {
    CHECK(sylvester_invariants(3, 5) == FrobeniusGenus{7, 4});
    CHECK(sylvester_invariants(1, 5) == FrobeniusGenus{-1, 0});
    CHECK_THROWS_AS(sylvester_invariants(4, 6), precondition_error);
}

TEST_CASE("two-generator closed form") {
    CHECK(genus_quotient_ed2_closed_form(3, 5, 2) == 2);
    CHECK(genus_quotient_ed2_closed_form(2, 3, 5) == 0);
    CHECK(genus_quotient_ed2_closed_form(5, 7, 3) == 4);
    CHECK(ed2_closed_form_applies(3, 5, 2));
    CHECK_FALSE(ed2_closed_form_applies(3, 4, 2));
    CHECK_FALSE(ed2_closed_form_applies(3, 5, 1));
    CHECK_THROWS_AS(genus_quotient_ed2_closed_form(3, 4, 2), precondition_error);
    CHECK_FALSE(ed2_closed_form_value(4, 5, 2).has_value());
}

TEST_CASE("the constant C") {
    CHECK(cabd_offset(3, 5, 2) == Rational(0));
    CHECK(cabd_offset(4, 5, 3) == Rational(0));
    CHECK(extract_cabd_constant(1, 1, 2, {{3, 5}, {5, 7}, {3, 7}}) == Rational(0));
    CHECK(extract_cabd_constant(1, 2, 3, {{4, 5}, {7, 11}}) == Rational(0));
    CHECK_THROWS_AS(extract_cabd_constant(1, 1, 2, {{3, 5}}), precondition_error);
    CHECK_THROWS_AS(extract_cabd_constant(1, 1, 2, {{3, 5}, {4, 7}}), precondition_error);
    const auto pairs = cabd_admissible_pairs(1, 2, 3, 20);
    CHECK_FALSE(pairs.empty());
    for (auto [a, b] : pairs) {
        CHECK(a % 3 == 1);
        CHECK(b % 3 == 2);
    }
}

TEST_CASE("Lagrange interpolation") {
    auto [c2, c1, c0] = lagrange_quadratic({3, 1}, {5, 4}, {7, 9});
    CHECK(c2 == Rational(1, 4));
    CHECK(c1 == Rational(-1, 2));
    CHECK(c0 == Rational(1, 4));
}

TEST_CASE("quasipolynomial fits") {
    const auto fit = fit_quasipolynomial(1, 2, 3, 41);
    REQUIRE(fit.per_class.size() == 2);
    CHECK(fit.per_class[0].c2 == Rational(1, 4));
    CHECK(fit.per_class[0].c1 == Rational(-1, 2));
    CHECK(fit.per_class[0].c0 == Rational(0));
    CHECK(fit.per_class[1].c0 == Rational(1, 4));

    const auto whole = fit_quasipolynomial(1, 1, 2, 20);
    REQUIRE(whole.per_class.size() == 1);
    CHECK(whole.per_class[0].c2 == Rational(1, 2));
    CHECK(whole.per_class[0].c1 == Rational(-1, 2));
    CHECK(whole.per_class[0].c0 == Rational(0));

    const auto odd = fit_quasipolynomial(2, 4, 3, 99);
    std::vector<i64> residues;
    for (const auto& c : odd.per_class)
        residues.push_back(c.residue);
    CHECK(residues == std::vector<i64>{1, 3});
    CHECK(quasipolynomial_classes(2, 4) == std::vector<i64>{1, 3});

    const auto k3 = fit_quasipolynomial(3, 5, 7, 60);
    REQUIRE(k3.per_class.size() == 5);
    CHECK(k3.per_class[2].samples.front() == std::pair<i64, i64>{7, 3});
    CHECK(k3.per_class[0].samples.front() == std::pair<i64, i64>{10, 6});
    CHECK(k3.per_class[4].samples.front() == std::pair<i64, i64>{14, 21});
    for (const auto& c : k3.per_class) {
        CHECK(c.c2 == Rational(1, 10));
        for (auto [a, g] : c.samples)
            CHECK(c.evaluate(a) == Rational(g));
    }

    CHECK_THROWS_AS(fit_quasipolynomial(1, 2, 3, 9), precondition_error);
}
