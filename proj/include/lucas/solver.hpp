#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "lucas/bounds.hpp"
#include "lucas/normalize.hpp"
#include "lucas/oracle.hpp"
#include "lucas/parametric.hpp"
#include "lucas/sporadic.hpp"

namespace lucas {

struct SolveResult {
    BoundSet bounds;  // at the original x
    std::vector<OriginalSolution> sporadic;
    std::vector<ParametricFamily> families;
    bool self_check_ran = false;
    bool self_check_ok = true;
};

namespace detail {

/// Families whose coefficient tuple is exactly one branch's nonzero
/// coefficients, in slot order, with the bottom slot as the constant term.
inline void branch_families(const CanonicalEquation& eq, std::set<ParametricFamily>& out) {
    std::vector<std::int64_t> cs;
    for (int s = 0; s < eq.arity; ++s)
        if (eq.coeffs[s] != 0) cs.push_back(eq.coeffs[s]);
    if (cs.size() < 3) return;

    BoundSet pb = parametric_bounds(eq.effective_x);
    for (std::int64_t r = 1; r <= pb.r_max; ++r) {
        LucasParams params(r);
        if (cs.size() == 3) {
            const std::int64_t cap = std::max(pb.tri_i_max, pb.tri_j_max);
            for (std::int64_t hi = 2; hi <= cap; ++hi)
                for (std::int64_t lo = 1; lo < hi; ++lo) {
                    bool in_bounds = (lo <= pb.tri_i_max && hi <= pb.tri_j_max) ||
                                     (hi <= pb.tri_i_max && lo <= pb.tri_j_max);
                    if (!in_bounds) continue;
                    if (is_multiple(cs, {hi, lo, 0}, params))
                        out.insert(make_family(r, {hi, lo, 0},
                                                                   {cs[0], cs[1], cs[2]}));
                }
        } else {
            for (std::int64_t k = 3; k <= pb.quad_k_max; ++k)
                for (std::int64_t j = 2; j < std::min(k, pb.quad_j_max + 1); ++j)
                    for (std::int64_t i = 1; i < std::min(j, pb.quad_i_max + 1); ++i)
                        if (is_multiple(cs, {k, j, i, 0}, params))
                            out.insert(make_family(
                                r, {k, j, i, 0}, {cs[0], cs[1], cs[2], cs[3]}));
        }
    }
}

}  // namespace detail

/// Ceilings for an exhaustive search of a plain box: every index up to cap,
/// every r up to r_max. Used for oracle cross-checks, where the comparison
/// must cover the box uniformly rather than stop at the theorem ceilings
/// (solutions beyond those ceilings belong to parametric families).
inline BoundSet box_bounds(std::int64_t r_max, std::int64_t cap) {
    BoundSet b;
    b.x = 1;
    b.r_max = r_max;
    b.n1_max = b.n2_max = b.n3_max = b.n4_max = cap;
    b.cd_zero_n_max = cap;
    return b;
}

/// Branch-coverage check: search every canonical branch over a uniform box,
/// map the hits back, and compare with the quadruple-loop oracle over the
/// original variables on the same box.
inline bool solve_matches_oracle(const ProblemSpec& spec, std::int64_t r_max,
                                 std::int64_t cap) {
    BoundSet box = box_bounds(r_max, cap);
    auto in_box = [cap](const OriginalSolution& s) {
        return s.n <= cap && s.m <= cap && s.n1 <= cap && s.m1 <= cap;
    };
    std::vector<OriginalSolution> got;
    for (const auto& eq : canonicalize(spec)) {
        for (const auto& hit : search_sporadic(eq, box)) {
            CanonicalSolution canon{hit.r, hit.indices};
            if (auto orig = denormalize(canon, eq, spec))
                if (in_box(*orig)) got.push_back(*orig);
        }
    }
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    std::vector<OriginalSolution> want;
    for (auto& s : oracle::brute_force_original(spec, 1, r_max, cap))
        if (in_box(s)) want.push_back(std::move(s));
    return got.size() == want.size() && std::equal(got.begin(), got.end(), want.begin());
}

/// Full pipeline: canonicalize the equation, run the bounded sporadic search
/// on every branch, map hits back to (n, m, n1, m1), and detect parametric
/// families attached to the branch coefficient tuples. Deterministic for any
/// thread count.
inline SolveResult solve(const ProblemSpec& spec, int threads = 1, bool self_check = false) {
    SolveResult result;
    result.bounds = all_bounds(spec.x());

    auto branches = canonicalize(spec);
    std::vector<OriginalSolution> sols;
    std::set<ParametricFamily> families;
    for (const auto& eq : branches) {
        BoundSet bset = all_bounds(eq.effective_x);
        for (const auto& hit : search_sporadic(eq, bset, threads)) {
            CanonicalSolution canon{hit.r, hit.indices};
            if (auto orig = denormalize(canon, eq, spec)) sols.push_back(*orig);
        }
        detail::branch_families(eq, families);
    }

    std::sort(sols.begin(), sols.end(), [](const auto& lhs, const auto& rhs) {
        return std::tie(lhs.r, lhs.n, lhs.m, lhs.n1, lhs.m1, lhs.branch) <
               std::tie(rhs.r, rhs.n, rhs.m, rhs.n1, rhs.m1, rhs.branch);
    });
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    result.sporadic = std::move(sols);
    result.families = {families.begin(), families.end()};

    if (self_check) {
        result.self_check_ran = true;
        result.self_check_ok = solve_matches_oracle(spec, 3, 12);
    }
    return result;
}

}  // namespace lucas
