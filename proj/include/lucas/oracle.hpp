#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lucas/bigint.hpp"
#include "lucas/core.hpp"
#include "lucas/normalize.hpp"
#include "lucas/sporadic.hpp"

// Deliberately naive reference implementations. They share no machinery with
// the optimized search paths; divergence between the two is a bug by
// definition.

namespace lucas::oracle {

inline constexpr std::int64_t kMaxBruteForceCap = 30;

namespace detail {

// local term computation, independent of TermTable
inline std::vector<BigInt> plain_terms(std::int64_t r, std::int64_t n_max) {
    std::vector<BigInt> u(static_cast<std::size_t>(n_max) + 1);
    u[0] = 0;
    if (n_max >= 1) u[1] = 1;
    for (std::int64_t k = 2; k <= n_max; ++k)
        u[static_cast<std::size_t>(k)] =
            r * u[static_cast<std::size_t>(k - 1)] + u[static_cast<std::size_t>(k - 2)];
    return u;
}

}  // namespace detail

/// Quadruple-loop enumeration of all canonical-equation solutions with the
/// top index at most index_cap, same ordering contract as search_sporadic.
inline std::vector<SporadicSolution> brute_force_search(const CanonicalEquation& eq,
                                                        std::int64_t r_lo, std::int64_t r_hi,
                                                        std::int64_t index_cap) {
    if (index_cap < 1 || index_cap > kMaxBruteForceCap)
        throw std::invalid_argument("brute_force_search: index_cap out of safe range");
    std::vector<SporadicSolution> found;
    for (std::int64_t r = r_lo; r <= r_hi; ++r) {
        auto u = detail::plain_terms(r, index_cap);
        std::array<std::int64_t, 4> idx{{0, 0, 0, 0}};
        std::function<void(int)> rec = [&](int s) {
            if (s < 0) {
                BigInt sum = 0;
                for (int t = 0; t < eq.arity; ++t)
                    sum += eq.coeffs[t] * u[static_cast<std::size_t>(idx[t])];
                if (sum != 0) return;
                SporadicSolution sol;
                sol.r = r;
                for (int t = 0; t < eq.arity; ++t) {
                    sol.indices[t] = idx[t];
                    sol.coeffs[t] = eq.coeffs[t];
                }
                sol.branch_tag = eq.branch_tag;
                found.push_back(std::move(sol));
                return;
            }
            std::int64_t lo = s == eq.arity - 1
                                  ? 0
                                  : idx[s + 1] + (s == 0 || eq.strict_gap[s] ? 1 : 0);
            for (std::int64_t k = lo; k <= index_cap; ++k) {
                idx[s] = k;
                rec(s - 1);
            }
        };
        rec(eq.arity - 1);
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// Quadruple-loop search over the original variables (n, m, n1, m1), with
/// every original constraint applied directly. Variables the equation does
/// not constrain are pinned the way the solver reports them (m1 = 0 when
/// D = 0, n1 = m1 + 1 when C = 0). Used to validate the whole
/// canonicalize -> search -> denormalize pipeline on small boxes.
inline std::vector<OriginalSolution> brute_force_original(const ProblemSpec& spec,
                                                          std::int64_t r_lo,
                                                          std::int64_t r_hi,
                                                          std::int64_t index_cap) {
    if (index_cap < 1 || index_cap > kMaxBruteForceCap)
        throw std::invalid_argument("brute_force_original: index_cap out of safe range");
    std::vector<OriginalSolution> found;
    for (std::int64_t r = r_lo; r <= r_hi; ++r) {
        auto u = detail::plain_terms(r, index_cap);
        auto at = [&](std::int64_t k) -> const BigInt& {
            return u[static_cast<std::size_t>(k)];
        };
        for (std::int64_t n = 1; n <= index_cap; ++n)
            for (std::int64_t m = 0; m < n; ++m)
                for (std::int64_t m1 = 0; m1 <= (spec.d != 0 ? index_cap : 0); ++m1)
                    for (std::int64_t n1 = m1 + 1;
                         n1 <= (spec.c != 0 ? index_cap : m1 + 1); ++n1) {
                        if (spec.a * at(n) + spec.b * at(m) - spec.c * at(n1) -
                                spec.d * at(m1) !=
                            0)
                            continue;
                        if (spec.a * at(n) == spec.c * at(n1)) continue;
                        found.push_back({r, n, m, n1, m1, "oracle"});
                    }
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// Schoolbook polynomial long division by X^2 - r*X - 1. coeffs[i] is the
/// coefficient of X^i. Returns the quotient in the same layout and the
/// remainder u*X + v; the reconstruction identity is re-checked before
/// returning.
inline std::pair<std::vector<BigInt>, std::pair<BigInt, BigInt>> poly_divide(
    const std::vector<BigInt>& coeffs, LucasParams params) {
    if (coeffs.empty()) throw std::invalid_argument("poly_divide: empty polynomial");
    const std::int64_t r = params.r;
    std::vector<BigInt> rem = coeffs;
    std::vector<BigInt> quot(coeffs.size() > 2 ? coeffs.size() - 2 : 0);
    for (std::size_t deg = rem.size(); deg-- > 2;) {
        BigInt q = rem[deg];
        if (q == 0) continue;
        quot[deg - 2] = q;
        rem[deg] = 0;
        rem[deg - 1] += r * q;
        rem[deg - 2] += q;
    }
    BigInt u = rem.size() > 1 ? rem[1] : BigInt(0);
    BigInt v = rem[0];

    // reconstruct: dividend == quotient * (X^2 - rX - 1) + uX + v
    std::vector<BigInt> check(coeffs.size(), 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
        check[i + 2] += quot[i];
        check[i + 1] -= r * quot[i];
        check[i] -= quot[i];
    }
    if (check.size() > 1) check[1] += u;
    check[0] += v;
    if (check != coeffs) throw std::logic_error("poly_divide: reconstruction failed");
    return {std::move(quot), {std::move(u), std::move(v)}};
}

}  // namespace lucas::oracle
