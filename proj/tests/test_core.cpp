#include <catch_amalgamated.hpp>

#include "lucas/core.hpp"

using lucas::BigInt;
using lucas::LucasParams;

namespace {

// exact Binet inequality checks: alpha^k = U_k*alpha + U_{k-1}, and
// alpha <= p/q reduces to an integer comparison after isolating the radical
bool alpha_leq(std::int64_t r, const BigInt& p, const BigInt& q) {
    BigInt t = 2 * p - r * q;
    if (t < 0) return false;
    return q * q * (r * r + 4) <= t * t;
}

bool alpha_geq(std::int64_t r, const BigInt& p, const BigInt& q) {
    BigInt t = 2 * p - r * q;
    if (t <= 0) return true;
    return q * q * (r * r + 4) >= t * t;
}

bool binet_bounds_hold(const lucas::TermTable& table, std::int64_t n) {
    const std::int64_t r = table.r();
    if (n == 1 || n == 2) return table.at(n) >= 1;  // alpha^{-1} < 1, alpha^0 = 1 <= r
    // alpha^{n-2} <= U_n  <=>  alpha <= (U_n - U_{n-3}) / U_{n-2}
    if (!alpha_leq(r, table.at(n) - table.at(n - 3), table.at(n - 2))) return false;
    // U_n <= alpha^{n-1}  <=>  alpha >= (U_n - U_{n-2}) / U_{n-1}
    return alpha_geq(r, table.at(n) - table.at(n - 2), table.at(n - 1));
}

}  // namespace

TEST_CASE("lucas_term small values") {
    CHECK(lucas::lucas_term(LucasParams(1), 0) == 0);
    CHECK(lucas::lucas_term(LucasParams(7), 0) == 0);
    CHECK(lucas::lucas_term(LucasParams(3), 2) == 3);
    CHECK(lucas::lucas_term(LucasParams(1), 10) == 55);
    CHECK(lucas::lucas_term(LucasParams(2), 5) == 29);
}

TEST_CASE("lucas_term backward extension") {
    for (std::int64_t r : {1, 2, 5}) {
        CHECK(lucas::lucas_term(LucasParams(r), -1) == 1);
        // U_1 = r*U_0 + U_{-1}
        CHECK(lucas::lucas_term(LucasParams(r), 1) ==
              r * lucas::lucas_term(LucasParams(r), 0) + lucas::lucas_term(LucasParams(r), -1));
    }
}

TEST_CASE("lucas_term rejects bad arguments") {
    CHECK_THROWS_AS(lucas::lucas_term(LucasParams(1), -2), std::invalid_argument);
    CHECK_THROWS_AS(LucasParams(0), std::invalid_argument);
}

TEST_CASE("lucas_prefix matches lucas_term") {
    auto fib = lucas::lucas_prefix(LucasParams(1), 5);
    CHECK(fib.terms() == std::vector<BigInt>{0, 1, 1, 2, 3, 5});
    auto pell = lucas::lucas_prefix(LucasParams(2), 3);
    CHECK(pell.terms() == std::vector<BigInt>{0, 1, 2, 5});
    auto single = lucas::lucas_prefix(LucasParams(7), 1);
    CHECK(single.terms() == std::vector<BigInt>{0, 1});

    for (std::int64_t r : {1, 3, 11}) {
        auto table = lucas::lucas_prefix(LucasParams(r), 40);
        for (std::int64_t n = 0; n <= 40; ++n)
            CHECK(table.at(n) == lucas::lucas_term(LucasParams(r), n));
    }
}

TEST_CASE("lucas_gcd examples") {
    CHECK(lucas::lucas_gcd(LucasParams(1), 10, 15) == 5);
    CHECK(lucas::lucas_gcd(LucasParams(2), 4, 6) == 2);
    CHECK(lucas::lucas_gcd(LucasParams(4), 9, 9) == lucas::lucas_term(LucasParams(4), 9));
    CHECK_THROWS_AS(lucas::lucas_gcd(LucasParams(1), 0, 3), std::invalid_argument);
}

TEST_CASE("gcd identity on a sample grid") {
    for (std::int64_t r : {1, 2, 7, 13}) {
        LucasParams params(r);
        auto table = lucas::lucas_prefix(params, 40);
        for (std::int64_t n = 1; n <= 40; n += 3)
            for (std::int64_t m = 1; m <= 40; m += 4)
                CHECK(lucas::lucas_gcd(params, n, m) == table.at(std::gcd(n, m)));
    }
}

TEST_CASE("monotonicity") {
    for (std::int64_t r = 1; r <= 6; ++r) {
        auto table = lucas::lucas_prefix(LucasParams(r), 30);
        for (std::int64_t n = 1; n < 30; ++n) {
            CHECK(table.at(n + 1) >= table.at(n));
            if (r >= 2 || n >= 2) CHECK(table.at(n + 1) > table.at(n));
        }
    }
}

TEST_CASE("Binet inequality, exact integer form") {
    for (std::int64_t r = 1; r <= 8; ++r) {
        auto table = lucas::lucas_prefix(LucasParams(r), 45);
        for (std::int64_t n = 1; n <= 45; ++n) CHECK(binet_bounds_hold(table, n));
    }
}
