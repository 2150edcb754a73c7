#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace lucas {

/// Effective search ceilings as a function of the coefficient bound
/// x = max{|A|,|B|,|C|,|D|}. All index ceilings are floors of closed-form
/// expressions in log(x)/log(phi), phi = (1+sqrt 5)/2.
struct BoundSet {
    std::int64_t x = 1;
    std::int64_t r_max = 14;

    // sporadic index ceilings, n4_max <= n3_max <= n2_max <= n1_max
    std::int64_t n4_max = 0, n3_max = 0, n2_max = 0, n1_max = 0;

    // three-term family exponent ceilings
    std::int64_t tri_i_max = 0, tri_j_max = 0;

    // four-term family exponent ceilings, quad_i_max <= quad_j_max <= quad_k_max
    std::int64_t quad_i_max = 0, quad_j_max = 0, quad_k_max = 0;

    // ceiling on n for the degenerate C = D = 0 equation
    std::int64_t cd_zero_n_max = 0;
};

namespace detail {

// floor((log(c) + p*log(x)) / log(phi)), evaluated at two precisions.
// The nudge absorbs sub-ulp drift; the arguments stay far from integers
// for every x this artifact sees, and the dual evaluation asserts that.
template <typename F>
std::int64_t floor_log_expr_one(F c, int p, std::int64_t x, F extra) {
    const F phi = (F(1) + std::sqrt(F(5))) / F(2);
    F v = extra + (std::log(c) + F(p) * std::log(F(x))) / std::log(phi);
    return static_cast<std::int64_t>(std::floor(v + F(1e-9)));
}

inline std::int64_t floor_log_expr(double c, int p, std::int64_t x, double extra = 0.0) {
    auto lo = floor_log_expr_one<double>(c, p, x, extra);
    auto hi = floor_log_expr_one<long double>(static_cast<long double>(c), p, x,
                                              static_cast<long double>(extra));
    if (lo != hi) throw std::runtime_error("bounds: precision drift in floor computation");
    return lo;
}

}  // namespace detail

/// Ceiling on n when C = D = 0: floor(6 + 2 log(x)/log(phi)).
inline std::int64_t cd_zero_bound(std::int64_t x) {
    if (x < 1) throw std::invalid_argument("cd_zero_bound: x must be >= 1");
    return detail::floor_log_expr(1.0, 2, x, 6.0);
}

/// Sporadic-solution ceilings: n4 <= log(8x)/log(phi), n3 <= log(400x^3)/log(phi),
/// n2 <= log(32000x^5)/log(phi), n1 <= log(640000x^6)/log(phi), r <= 14x.
/// The constants already account for the collision substitution, so callers
/// pass the original x (the stated r < 14X is made inclusive here).
inline BoundSet sporadic_bounds(std::int64_t x) {
    if (x < 1) throw std::invalid_argument("sporadic_bounds: x must be >= 1");
    BoundSet b;
    b.x = x;
    b.r_max = 14 * x;
    b.n4_max = detail::floor_log_expr(8.0, 1, x);
    b.n3_max = detail::floor_log_expr(400.0, 3, x);
    b.n2_max = detail::floor_log_expr(32000.0, 5, x);
    b.n1_max = detail::floor_log_expr(640000.0, 6, x);
    b.cd_zero_n_max = cd_zero_bound(x);
    return b;
}

/// Parametric-family exponent ceilings: i <= 2 log(8x)/log(phi) and
/// j <= log(500x^3)/log(phi) for three-term families; i <= log(50x^2)/log(phi),
/// j <= log(1600x^3)/log(phi), k <= log(25000x^4)/log(phi) for four-term ones.
inline BoundSet parametric_bounds(std::int64_t x) {
    if (x < 1) throw std::invalid_argument("parametric_bounds: x must be >= 1");
    BoundSet b;
    b.x = x;
    b.r_max = 14 * x;
    // 2*log(8x)/log(phi) = log(64x^2)/log(phi); floor once, not per factor
    b.tri_i_max = detail::floor_log_expr(64.0, 2, x);
    b.tri_j_max = detail::floor_log_expr(500.0, 3, x);
    b.quad_i_max = detail::floor_log_expr(50.0, 2, x);
    b.quad_j_max = detail::floor_log_expr(1600.0, 3, x);
    b.quad_k_max = detail::floor_log_expr(25000.0, 4, x);
    b.cd_zero_n_max = cd_zero_bound(x);
    return b;
}

/// Every ceiling at once; used by the solve pipeline.
inline BoundSet all_bounds(std::int64_t x) {
    BoundSet b = sporadic_bounds(x);
    BoundSet p = parametric_bounds(x);
    b.tri_i_max = p.tri_i_max;
    b.tri_j_max = p.tri_j_max;
    b.quad_i_max = p.quad_i_max;
    b.quad_j_max = p.quad_j_max;
    b.quad_k_max = p.quad_k_max;
    return b;
}

}  // namespace lucas
