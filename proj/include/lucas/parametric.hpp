#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lucas/bigint.hpp"
#include "lucas/bounds.hpp"
#include "lucas/core.hpp"

namespace lucas {

/// An infinite one-parameter family of solutions: a lacunary polynomial
/// sum_t coeffs[t] * X^exponents[t] (exponents strictly decreasing, last one 0)
/// that is exactly divisible by X^2 - r*X - 1, so the shifted identity
/// sum_t coeffs[t] * U_{n + exponents[t]} = 0 holds for every n >= 0.
struct ParametricFamily {
    std::int64_t r = 1;
    std::string kind;  // "three-term" | "four-term"
    std::vector<std::int64_t> exponents;  // strictly decreasing, ends at 0
    std::vector<std::int64_t> coeffs;     // aligned with exponents, leading > 0

    friend bool operator<(const ParametricFamily& lhs, const ParametricFamily& rhs) {
        return std::tie(lhs.r, lhs.exponents, lhs.coeffs) <
               std::tie(rhs.r, rhs.exponents, rhs.coeffs);
    }
    friend bool operator==(const ParametricFamily& lhs, const ParametricFamily& rhs) {
        return std::tie(lhs.r, lhs.exponents, lhs.coeffs) ==
               std::tie(rhs.r, rhs.exponents, rhs.coeffs);
    }
};

/// Remainder coordinates of X^e modulo X^2 - r*X - 1:
/// X^e == U_e * X + U_{e-1}, using U_{-1} = 1.
inline std::pair<BigInt, BigInt> reduce_power(LucasParams params, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("reduce_power: e must be >= 0");
    return {lucas_term(params, e), lucas_term(params, e - 1)};
}

/// True iff sum_t coeffs[t] * X^exponents[t] is divisible by X^2 - r*X - 1,
/// i.e. both remainder coordinates sum_t A_t*U_{e_t} and sum_t A_t*U_{e_t-1}
/// vanish. Exponents must be strictly decreasing and end at 0.
inline bool is_multiple(const std::vector<std::int64_t>& coeffs,
                        const std::vector<std::int64_t>& exponents, LucasParams params) {
    if (coeffs.size() != exponents.size() || coeffs.empty())
        throw std::invalid_argument("is_multiple: coefficient/exponent size mismatch");
    if (coeffs.front() == 0)
        throw std::invalid_argument("is_multiple: leading coefficient must be nonzero");
    for (std::size_t t = 1; t < exponents.size(); ++t)
        if (exponents[t] >= exponents[t - 1])
            throw std::invalid_argument("is_multiple: exponents must strictly decrease");
    if (exponents.back() < 0) throw std::invalid_argument("is_multiple: negative exponent");

    BigInt u = 0, v = 0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        auto [ue, uem1] = reduce_power(params, exponents[t]);
        u += coeffs[t] * ue;
        v += coeffs[t] * uem1;
    }
    return u == 0 && v == 0;
}

/// Exact check of the encoded identity for every shift n in [0, depth].
inline bool verify_family(const ParametricFamily& fam, std::int64_t depth) {
    LucasParams params(fam.r);
    std::int64_t top = fam.exponents.front() + depth;
    TermTable table(params, std::max<std::int64_t>(top, 1));
    for (std::int64_t n = 0; n <= depth; ++n) {
        BigInt sum = 0;
        for (std::size_t t = 0; t < fam.coeffs.size(); ++t)
            sum += fam.coeffs[t] * table.at(n + fam.exponents[t]);
        if (sum != 0) return false;
    }
    return true;
}

namespace detail {

/// Sign-normalize (leading coefficient positive), build and spot-verify a
/// family; terms with zero coefficient must already be dropped by the caller.
inline ParametricFamily make_family(std::int64_t r, std::vector<std::int64_t> exponents,
                                    std::vector<std::int64_t> coeffs) {
    if (coeffs.front() < 0)
        for (auto& c : coeffs) c = -c;
    ParametricFamily fam;
    fam.r = r;
    fam.kind = coeffs.size() == 3 ? "three-term" : "four-term";
    fam.exponents = std::move(exponents);
    fam.coeffs = std::move(coeffs);
    if (!verify_family(fam, 2))
        throw std::logic_error("make_family: divisible polynomial failed shift check");
    return fam;
}

}  // namespace detail

/// Enumerate every family with coefficients in [-coeff_box, coeff_box],
/// leading and constant coefficients nonzero, exponents within the
/// parametric ceilings, for every r in [1, bounds.r_max]. The three-term
/// exponent pair is admitted under both ceiling assignments (the theorem
/// statement and the derivation attach them to opposite terms), and results
/// are deduplicated after sign normalization, so families that arise as a
/// four-term tuple with a zero middle coefficient merge with their
/// three-term form.
inline std::vector<ParametricFamily> find_families(std::int64_t coeff_box, std::int64_t x,
                                                   const BoundSet& bounds) {
    if (coeff_box < 1 || x < 1) return {};
    std::set<ParametricFamily> found;

    auto nonzero_range = [&]() {
        std::vector<std::int64_t> v;
        for (std::int64_t c = -coeff_box; c <= coeff_box; ++c)
            if (c != 0) v.push_back(c);
        return v;
    }();
    auto any_range = [&]() {
        std::vector<std::int64_t> v;
        for (std::int64_t c = -coeff_box; c <= coeff_box; ++c) v.push_back(c);
        return v;
    }();

    const std::int64_t tri_cap = std::max(bounds.tri_i_max, bounds.tri_j_max);
    const std::int64_t table_cap = std::max({tri_cap, bounds.quad_k_max, std::int64_t{1}});
    for (std::int64_t r = 1; r <= bounds.r_max; ++r) {
        TermTable table(LucasParams(r), table_cap);
        // remainder coordinates of sum c_t X^{e_t} mod X^2 - r*X - 1;
        // same test as is_multiple, evaluated off the shared prefix table
        auto divisible = [&](const std::vector<std::int64_t>& cs,
                             const std::vector<std::int64_t>& exps) {
            BigInt u = 0;
            for (std::size_t t = 0; t < cs.size(); ++t) u += cs[t] * table.at(exps[t]);
            if (u != 0) return false;
            BigInt v = 0;
            for (std::size_t t = 0; t < cs.size(); ++t)
                v += exps[t] == 0 ? BigInt(cs[t]) : cs[t] * table.at(exps[t] - 1);
            return v == 0;
        };

        // three-term: A1*X^hi + A2*X^lo + A3, 0 < lo < hi
        for (std::int64_t hi = 2; hi <= tri_cap; ++hi)
            for (std::int64_t lo = 1; lo < hi; ++lo) {
                bool in_bounds = (lo <= bounds.tri_i_max && hi <= bounds.tri_j_max) ||
                                 (hi <= bounds.tri_i_max && lo <= bounds.tri_j_max);
                if (!in_bounds) continue;
                for (std::int64_t a1 = 1; a1 <= coeff_box; ++a1)
                    for (std::int64_t a2 : nonzero_range)
                        for (std::int64_t a3 : nonzero_range)
                            if (divisible({a1, a2, a3}, {hi, lo, 0}))
                                found.insert(
                                    detail::make_family(r, {hi, lo, 0}, {a1, a2, a3}));
            }

        // four-term: A1*X^k + A2*X^j + A3*X^i + A4, 0 < i < j < k,
        // middle coefficients may vanish, constant term may not
        for (std::int64_t k = 3; k <= bounds.quad_k_max; ++k)
            for (std::int64_t j = 2; j < std::min(k, bounds.quad_j_max + 1); ++j)
                for (std::int64_t i = 1; i < std::min(j, bounds.quad_i_max + 1); ++i)
                    for (std::int64_t a1 = 1; a1 <= coeff_box; ++a1)
                        for (std::int64_t a2 : any_range)
                            for (std::int64_t a3 : any_range)
                                for (std::int64_t a4 : nonzero_range) {
                                    std::vector<std::int64_t> exps, cs;
                                    for (auto [e, c] :
                                         {std::pair{k, a1}, {j, a2}, {i, a3},
                                          {std::int64_t{0}, a4}}) {
                                        if (c == 0) continue;
                                        exps.push_back(e);
                                        cs.push_back(c);
                                    }
                                    if (cs.size() < 3) continue;  // binomials never divide
                                    if (divisible(cs, exps))
                                        found.insert(detail::make_family(
                                            r, std::move(exps), std::move(cs)));
                                }
    }
    return {found.begin(), found.end()};
}

}  // namespace lucas
