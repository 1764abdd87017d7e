#include <doctest.h>

#include "nsg/progressions.hpp"
#include "nsg/quotient.hpp"

using namespace nsg;
using V = std::vector<i64>;

TEST_CASE("three-term progression symmetry") {
    CHECK(ap3_symmetric_iff_even(6, 1));
    CHECK_FALSE(ap3_symmetric_iff_even(5, 2));
    CHECK(ap3_symmetric_iff_even(2, 1));
    CHECK_THROWS_AS(ap3_symmetric_iff_even(4, 2), precondition_error);
    CHECK_THROWS_AS(ap3_symmetric_iff_even(1, 3), precondition_error);
}

TEST_CASE("spec parameters") {
    const auto odd = Ap3Spec::make(15, 2, 5);
    CHECK(odd.s == 3);
    CHECK(odd.t == 2);
    const auto even = Ap3Spec::make(8, 1, 4);
    CHECK(even.s == 2);
    CHECK(even.t == 2);
    CHECK_THROWS_AS(Ap3Spec::make(8, 1, 3), precondition_error);
    CHECK_THROWS_AS(Ap3Spec::make(8, 2, 4), precondition_error);
}

TEST_CASE("explicit quotient generators") {
    CHECK(ap3_quotient_generators(Ap3Spec::make(6, 1, 3)).minimal_generators() == V{2, 5});
    CHECK(ap3_quotient_generators(Ap3Spec::make(8, 1, 4)).minimal_generators() == V{2, 5});
    CHECK(ap3_quotient_generators(Ap3Spec::make(12, 5, 3)).minimal_generators() == V{4, 13, 22});
    CHECK_FALSE(ap3_generators_apply(Ap3Spec::make(9, 1, 3)));
    CHECK_THROWS_AS(ap3_quotient_generators(Ap3Spec::make(9, 1, 3)), precondition_error);
    CHECK_THROWS_AS(ap3_quotient_generators(Ap3Spec::make(6, 1, 2)), precondition_error);
}

TEST_CASE("even-d invariants") {
    CHECK(ap3_even_d_invariants(Ap3Spec::make(8, 1, 4)) == FrobeniusGenus{3, 2});
    CHECK(ap3_even_d_invariants(Ap3Spec::make(12, 1, 4)) == FrobeniusGenus{11, 6});
    CHECK(ap3_even_d_invariants(Ap3Spec::make(12, 5, 6)) == FrobeniusGenus{9, 5});
    CHECK_THROWS_AS(ap3_even_d_invariants(Ap3Spec::make(12, 5, 2)), precondition_error);
}

TEST_CASE("odd-a invariants") {
    CHECK(ap3_odd_a_invariants(Ap3Spec::make(15, 2, 5)) == FrobeniusGenus{16, 9});
    CHECK(ap3_odd_a_invariants(Ap3Spec::make(9, 1, 3)) == FrobeniusGenus{8, 5});
    CHECK(ap3_odd_a_invariants(Ap3Spec::make(9, 1, 9)) == FrobeniusGenus{-1, 0});
    CHECK_THROWS_AS(ap3_odd_a_invariants(Ap3Spec::make(8, 1, 4)), precondition_error);
}

TEST_CASE("full progressions") {
    const auto six = FullApSpec::make(6, 5);
    CHECK(six.generators() == V{6, 11, 16, 21, 26, 31});
    CHECK(full_ap_quotient(six, 3).minimal_generators() == V{2, 7});
    CHECK(full_ap_quotient(six, 6).is_whole());
    CHECK(full_ap_quotient(FullApSpec::make(8, 3), 2).minimal_generators() == V{4, 7, 10, 13});
    CHECK_THROWS_AS(full_ap_quotient(six, 4), precondition_error);

    CHECK(full_ap_divisor_identity(six, 3) == FrobeniusGenus{5, 3});
    CHECK(full_ap_divisor_identity(FullApSpec::make(9, 2), 3) == FrobeniusGenus{4, 3});
    CHECK(full_ap_divisor_identity(FullApSpec::make(4, 1), 1) == FrobeniusGenus{3, 3});
    CHECK_THROWS_AS(full_ap_divisor_identity(six, 6), precondition_error);

    CHECK(full_ap_d_divides_k(FullApSpec::make(5, 4), 2) == FrobeniusGenus{8, 6});
    CHECK(full_ap_d_divides_k(FullApSpec::make(4, 9), 3) == FrobeniusGenus{9, 6});
    CHECK(full_ap_d_divides_k(FullApSpec::make(5, 4), 1) == FrobeniusGenus{16, 10});
    CHECK_THROWS_AS(full_ap_d_divides_k(FullApSpec::make(5, 4), 3), precondition_error);
}

TEST_CASE("open problem sweep") {
    const auto rows = open_problem_sweep(7, 2, 3, 1, 7);
    REQUIRE(rows.size() == 7);
    const std::vector<std::pair<i64, i64>> expected{{19, 12}, {6, 6}, {5, 4}, {3, 3}, {3, 3}, {2, 2}, {-1, 0}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].d == static_cast<i64>(i) + 1);
        CHECK(std::pair{rows[i].frobenius, rows[i].genus} == expected[i]);
        CHECK(rows[i].twice_genus_minus_frobenius == 2 * expected[i].second - expected[i].first);
    }
    const auto other = open_problem_sweep(9, 1, 4, 2, 3);
    CHECK(other[0].frobenius == 8);
    CHECK(other[0].genus == 6);
    CHECK(other[1].frobenius == 5);
    CHECK(other[1].genus == 3);
    CHECK_THROWS_AS(open_problem_sweep(7, 2, 6, 1, 2), precondition_error);
    CHECK_THROWS_AS(open_problem_sweep(7, 2, 2, 1, 2), precondition_error);
}
