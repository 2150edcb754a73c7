#include <catch_amalgamated.hpp>

#include "lucas/bounds.hpp"

TEST_CASE("sporadic ceilings at x = 1") {
    auto b = lucas::sporadic_bounds(1);
    CHECK(b.n4_max == 4);
    CHECK(b.n3_max == 12);
    CHECK(b.n2_max == 21);
    CHECK(b.n1_max == 27);
    CHECK(b.r_max == 14);
}

TEST_CASE("parametric ceilings at x = 1") {
    auto b = lucas::parametric_bounds(1);
    CHECK(b.quad_i_max == 8);
    CHECK(b.quad_j_max == 15);
    CHECK(b.quad_k_max == 21);
    CHECK(b.tri_i_max == 8);
    CHECK(b.tri_j_max == 12);
}

TEST_CASE("cd_zero_bound values") {
    CHECK(lucas::cd_zero_bound(1) == 6);
    CHECK(lucas::cd_zero_bound(5) == 12);
    CHECK(lucas::cd_zero_bound(100) == 25);
}

TEST_CASE("x = 0 is rejected") {
    CHECK_THROWS_AS(lucas::sporadic_bounds(0), std::invalid_argument);
    CHECK_THROWS_AS(lucas::parametric_bounds(0), std::invalid_argument);
    CHECK_THROWS_AS(lucas::cd_zero_bound(0), std::invalid_argument);
}

TEST_CASE("monotonicity and containment over a wide x range") {
    auto prev = lucas::all_bounds(1);
    for (std::int64_t x = 1; x <= 2000; ++x) {
        auto b = lucas::all_bounds(x);
        CHECK(b.n4_max <= b.n3_max);
        CHECK(b.n3_max <= b.n2_max);
        CHECK(b.n2_max <= b.n1_max);
        CHECK(b.quad_i_max <= b.quad_j_max);
        CHECK(b.quad_j_max <= b.quad_k_max);
        CHECK(b.cd_zero_n_max <= b.n1_max);

        CHECK(b.n4_max >= prev.n4_max);
        CHECK(b.n3_max >= prev.n3_max);
        CHECK(b.n2_max >= prev.n2_max);
        CHECK(b.n1_max >= prev.n1_max);
        CHECK(b.tri_i_max >= prev.tri_i_max);
        CHECK(b.tri_j_max >= prev.tri_j_max);
        CHECK(b.quad_i_max >= prev.quad_i_max);
        CHECK(b.quad_j_max >= prev.quad_j_max);
        CHECK(b.quad_k_max >= prev.quad_k_max);
        CHECK(b.cd_zero_n_max >= prev.cd_zero_n_max);
        CHECK(b.r_max >= prev.r_max);
        prev = b;
    }
}
