#include <doctest.h>

#include "nsg/semigroup.hpp"

using namespace nsg;
using V = std::vector<i64>;

TEST_CASE("invariants of <3,5>") {
    const auto s = from_generators({3, 5});
    CHECK(s.minimal_generators() == V{3, 5});
    CHECK(s.multiplicity() == 3);
    CHECK(s.embedding_dimension() == 2);
    CHECK(s.frobenius() == 7);
    CHECK(s.conductor() == 8);
    CHECK(s.genus() == 4);
    CHECK(s.gaps() == V{1, 2, 4, 7});
    CHECK(s.apery().elements == V{0, 10, 5});
    CHECK(is_symmetric(s));
}

TEST_CASE("invariants of <6,7,8> and <5,7,9>") {
    const auto s = from_generators({6, 7, 8});
    CHECK(s.apery().elements == V{0, 7, 8, 15, 16, 23});
    CHECK(s.frobenius() == 17);
    CHECK(s.genus() == 9);
    CHECK(is_symmetric(s));

    const auto t = from_generators({5, 7, 9});
    CHECK(t.frobenius() == 13);
    CHECK(t.genus() == 8);
    CHECK_FALSE(is_symmetric(t));
}

TEST_CASE("redundant generators are dropped") {
    CHECK(from_generators({6, 9, 20, 27}).minimal_generators() == V{6, 9, 20});
    CHECK(from_generators({5, 3, 5, 10}).minimal_generators() == V{3, 5});
}

TEST_CASE("the whole of N") {
    const auto n = from_generators({1});
    CHECK(n.is_whole());
    CHECK(n.frobenius() == -1);
    CHECK(n.genus() == 0);
    CHECK(n.minimal_generators() == V{1});
    CHECK(n == NumericalSemigroup());
    CHECK(from_generators({2, 1, 7}) == n);
    CHECK(semigroup_polynomial_coeffs(n) == V{1});
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(from_generators({6, 9}), precondition_error);
    CHECK_THROWS_AS(from_generators(std::span<const i64>{}), precondition_error);
    CHECK_THROWS_AS(from_generators({0, 3}), precondition_error);
    CHECK_THROWS_AS(from_generators({-3, 5}), precondition_error);
}

TEST_CASE("membership") {
    const auto s = from_generators({3, 5});
    for (i64 x : {0, 3, 5, 6, 8, 9, 10, 100})
        CHECK(contains(s, x));
    for (i64 x : {1, 2, 4, 7, -1})
        CHECK_FALSE(contains(s, x));
}

TEST_CASE("Apery sets at other elements") {
    const auto s = from_generators({3, 5});
    CHECK(apery_set(s, 5).elements == V{0, 6, 12, 3, 9});
    CHECK(invariants_from_apery(apery_set(s, 5)) == FrobeniusGenus{7, 4});
    CHECK_THROWS_AS(apery_set(s, 4), precondition_error);
    CHECK_THROWS_AS(apery_set(s, 0), precondition_error);
}

TEST_CASE("from_apery rejects inconsistent sets") {
    CHECK(from_apery({3, {0, 10, 5}}) == from_generators({3, 5}));
    CHECK_THROWS_AS(from_apery({3, {0, 7, 2}}), invariant_violation);
    CHECK_THROWS_AS(from_apery({3, {1, 10, 5}}), invariant_violation);
}

TEST_CASE("from_membership builds the semigroup from a predicate") {
    auto member = [](i64 x) { return x == 0 || x >= 3; };
    CHECK(from_membership(member, 3).minimal_generators() == V{3, 4, 5});
    CHECK(from_membership([](i64) { return true; }, 0).is_whole());
}

TEST_CASE("closure check finds violations") {
    CHECK_FALSE(first_closure_violation([](i64 x) { return x % 3 == 0 || x > 7; }, 30));
    auto bad = first_closure_violation([](i64 x) { return x == 0 || x == 3 || x >= 7; }, 20);
    REQUIRE(bad);
    CHECK(*bad == std::pair<i64, i64>{3, 3});
}

TEST_CASE("d-symmetry") {
    const auto s = from_generators({5, 7, 9});
    CHECK(d_symmetry_violation(s, 1).has_value());
    // every multiple of 13 is past F = 13 except 13 itself, and F - 13 = 0 is in S
    CHECK(is_d_symmetric(s, 13));
    CHECK(is_d_symmetric(from_generators({3, 5}), 2));
}

TEST_CASE("semigroup polynomial of <3,5>") {
    // 1 - (1-x)(x + x^2 + x^4 + x^7)
    CHECK(semigroup_polynomial_coeffs(from_generators({3, 5})) == V{1, -1, 0, 1, -1, 1, 0, -1, 1});
}
