#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lucas/bigint.hpp"
#include "lucas/core.hpp"

namespace lucas {

/// The user-facing equation A*U_n + B*U_m = C*U_{n1} + D*U_{m1},
/// with n > m >= 0, n1 > m1 >= 0 and A*U_n != C*U_{n1}.
struct ProblemSpec {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    ProblemSpec(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
        : a(a_), b(b_), c(c_), d(d_) {
        if (a == 0 || b == 0)
            throw std::invalid_argument("ProblemSpec: A and B must be nonzero");
    }

    std::int64_t x() const {
        return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    }
};

enum class Var : int { N = 0, M = 1, N1 = 2, M1 = 3 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::N: return "n";
        case Var::M: return "m";
        case Var::N1: return "n1";
        default: return "m1";
    }
}

/// One sorted-index branch A1*U_{k1} + A2*U_{k2} + ... = 0 over strictly or
/// weakly decreasing slot indices. Slots whose merged coefficient cancelled
/// to zero stay in the equation as free indices so their original variables
/// keep a position; the search enumerates them like any other slot.
struct CanonicalEquation {
    std::array<std::int64_t, 4> coeffs{{0, 0, 0, 0}};
    int arity = 0;
    std::array<bool, 3> strict_gap{{true, true, true}};
    std::int64_t effective_x = 1;
    bool degenerate = false;  // two nonzero coefficients: cd_zero-bounded branch
    std::string branch_tag;
    std::array<std::vector<Var>, 4> slot_vars{};

    int nonzero_count() const {
        int c = 0;
        for (int s = 0; s < arity; ++s)
            if (coeffs[s] != 0) ++c;
        return c;
    }
};

/// A canonical-equation hit: slot indices k1 > / >= k2 >= ... with the
/// vanishing sum holding exactly. Unused slots carry index 0, coeff 0.
struct CanonicalSolution {
    std::int64_t r = 1;
    std::array<std::int64_t, 4> indices{{0, 0, 0, 0}};
};

struct OriginalSolution {
    std::int64_t r = 1;
    std::int64_t n = 0, m = 0, n1 = 0, m1 = 0;
    std::string branch;

    friend bool operator<(const OriginalSolution& lhs, const OriginalSolution& rhs) {
        return std::tie(lhs.r, lhs.n, lhs.m, lhs.n1, lhs.m1) <
               std::tie(rhs.r, rhs.n, rhs.m, rhs.n1, rhs.m1);
    }
    friend bool operator==(const OriginalSolution& lhs, const OriginalSolution& rhs) {
        return std::tie(lhs.r, lhs.n, lhs.m, lhs.n1, lhs.m1) ==
               std::tie(rhs.r, rhs.n, rhs.m, rhs.n1, rhs.m1);
    }
};

namespace detail {

inline std::int64_t signed_coeff(const ProblemSpec& spec, Var v) {
    switch (v) {
        case Var::N: return spec.a;
        case Var::M: return spec.b;
        case Var::N1: return -spec.c;
        default: return -spec.d;
    }
}

}  // namespace detail

/// Expand the problem into every sorted-index branch the search needs.
/// Branches are indexed by the exact equality pattern of the active variables,
/// so each original solution is discoverable in exactly one branch. Tied
/// variables share a slot with their coefficients summed; any branch tying
/// n with n1 under A = C is dropped because all its solutions violate the
/// A*U_n != C*U_{n1} side condition.
inline std::vector<CanonicalEquation> canonicalize(const ProblemSpec& spec) {
    std::vector<CanonicalEquation> out;
    const std::int64_t x = spec.x();

    std::vector<Var> active = {Var::N, Var::M};
    if (spec.c != 0) active.push_back(Var::N1);
    if (spec.d != 0) active.push_back(Var::M1);
    const int k = static_cast<int>(active.size());

    // every rank assignment: rank 0 = largest index value, equal rank = tied
    std::vector<int> rank(static_cast<std::size_t>(k), 0);
    auto emit = [&]() {
        int groups = 1 + *std::max_element(rank.begin(), rank.end());
        // ranks must be contiguous
        std::vector<bool> used(static_cast<std::size_t>(groups), false);
        for (int rk : rank) used[static_cast<std::size_t>(rk)] = true;
        if (!std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        // side-internal orderings are strict
        auto rank_of = [&](Var v) {
            auto it = std::find(active.begin(), active.end(), v);
            return rank[static_cast<std::size_t>(it - active.begin())];
        };
        if (rank_of(Var::N) >= rank_of(Var::M)) return;
        if (spec.c != 0 && spec.d != 0 && rank_of(Var::N1) >= rank_of(Var::M1)) return;

        CanonicalEquation eq;
        eq.arity = groups;
        bool tied = false;
        for (int g = 0; g < groups; ++g) {
            for (int i = 0; i < k; ++i) {
                if (rank[static_cast<std::size_t>(i)] != g) continue;
                eq.coeffs[g] += detail::signed_coeff(spec, active[static_cast<std::size_t>(i)]);
                eq.slot_vars[g].push_back(active[static_cast<std::size_t>(i)]);
            }
            if (eq.slot_vars[g].size() > 1) tied = true;
            // n = n1 with A = C: every solution has A*U_n = C*U_{n1}
            bool has_n = std::find(eq.slot_vars[g].begin(), eq.slot_vars[g].end(), Var::N) !=
                         eq.slot_vars[g].end();
            bool has_n1 = std::find(eq.slot_vars[g].begin(), eq.slot_vars[g].end(), Var::N1) !=
                          eq.slot_vars[g].end();
            if (has_n && has_n1 && spec.a == spec.c) return;
        }
        if (eq.coeffs[0] == 0) return;  // free top group only arises via the case above
        if (eq.nonzero_count() < 2) return;
        eq.degenerate = eq.nonzero_count() == 2;
        eq.effective_x = tied ? 2 * x : x;
        std::string tag;
        for (int g = 0; g < groups; ++g) {
            if (g) tag += ">";
            for (std::size_t i = 0; i < eq.slot_vars[g].size(); ++i) {
                if (i) tag += "=";
                tag += var_name(eq.slot_vars[g][i]);
            }
        }
        eq.branch_tag = tag;
        out.push_back(std::move(eq));
    };

    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    // odometer over rank vectors in {0..k-1}^k
    while (true) {
        rank = idx;
        emit();
        int p = k - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == k - 1) {
            idx[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
    }
    return out;
}

/// Map a canonical hit back to (n, m, n1, m1), fill the variables the input
/// equation does not constrain (m1 = 0 when D = 0; n1 = m1 + 1 when C = 0),
/// and re-check every original constraint exactly. Returning nullopt is a
/// normal outcome, not an error.
inline std::optional<OriginalSolution> denormalize(const CanonicalSolution& sol,
                                                   const CanonicalEquation& eq,
                                                   const ProblemSpec& spec) {
    std::array<std::int64_t, 4> value{{-1, -1, -1, -1}};
    for (int s = 0; s < eq.arity; ++s)
        for (Var v : eq.slot_vars[s]) value[static_cast<int>(v)] = sol.indices[s];

    std::int64_t n = value[static_cast<int>(Var::N)];
    std::int64_t m = value[static_cast<int>(Var::M)];
    std::int64_t m1 = spec.d != 0 ? value[static_cast<int>(Var::M1)] : 0;
    std::int64_t n1 = spec.c != 0 ? value[static_cast<int>(Var::N1)] : m1 + 1;

    if (n < 0 || m < 0 || n1 < 0 || m1 < 0) return std::nullopt;
    if (!(n > m && n1 > m1)) return std::nullopt;

    LucasParams params(sol.r);
    BigInt un = lucas_term(params, n);
    BigInt um = lucas_term(params, m);
    BigInt un1 = lucas_term(params, n1);
    BigInt um1 = lucas_term(params, m1);
    if (spec.a * un + spec.b * um - spec.c * un1 - spec.d * um1 != 0) return std::nullopt;
    if (spec.a * un == spec.c * un1) return std::nullopt;

    OriginalSolution orig;
    orig.r = sol.r;
    orig.n = n;
    orig.m = m;
    orig.n1 = n1;
    orig.m1 = m1;
    orig.branch = eq.branch_tag;
    return orig;
}

}  // namespace lucas
