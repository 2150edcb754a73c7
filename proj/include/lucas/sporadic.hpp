#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "lucas/bigint.hpp"
#include "lucas/bounds.hpp"
#include "lucas/core.hpp"
#include "lucas/normalize.hpp"

namespace lucas {

/// A concrete bounded solution of one canonical equation, verified exactly.
struct SporadicSolution {
    std::int64_t r = 1;
    std::array<std::int64_t, 4> indices{{0, 0, 0, 0}};  // k1 >= k2 >= k3 >= k4
    std::array<std::int64_t, 4> coeffs{{0, 0, 0, 0}};
    std::string branch_tag;

    friend bool operator<(const SporadicSolution& lhs, const SporadicSolution& rhs) {
        return std::tie(lhs.r, lhs.indices, lhs.coeffs) <
               std::tie(rhs.r, rhs.indices, rhs.coeffs);
    }
    friend bool operator==(const SporadicSolution& lhs, const SporadicSolution& rhs) {
        return std::tie(lhs.r, lhs.indices, lhs.coeffs) ==
               std::tie(rhs.r, rhs.indices, rhs.coeffs);
    }
};

enum class Convention { Tuple, Existence, LeastIndex };

inline const char* convention_name(Convention c) {
    switch (c) {
        case Convention::Tuple: return "tuple";
        case Convention::Existence: return "existence";
        default: return "least-index";
    }
}

struct SearchReport {
    std::int64_t total = 0;
    std::map<std::int64_t, std::int64_t> per_r;
    Convention convention = Convention::LeastIndex;
    std::map<std::string, std::int64_t> convention_totals;
    std::vector<SporadicSolution> solutions;
};

namespace detail {

/// Per-slot index ceilings for one canonical equation. Nonzero slots take the
/// theorem ceilings in order (or the C=D=0 ceiling when only two coefficients
/// survive); slots whose coefficient cancelled inherit the ceiling above them.
inline std::array<std::int64_t, 4> slot_ceilings(const CanonicalEquation& eq,
                                                 const BoundSet& bounds) {
    std::array<std::int64_t, 4> theorem{{bounds.n1_max, bounds.n2_max, bounds.n3_max,
                                         bounds.n4_max}};
    std::array<std::int64_t, 4> out{{0, 0, 0, 0}};
    const bool two_term = eq.nonzero_count() == 2;
    int pos = 0;
    for (int s = 0; s < eq.arity; ++s) {
        if (eq.coeffs[s] != 0) {
            out[s] = two_term ? bounds.cd_zero_n_max : theorem[pos];
            ++pos;
        } else {
            out[s] = s == 0 ? bounds.n1_max : out[s - 1];
        }
    }
    return out;
}

/// Run fn(r) for every r in [1, r_max] and concatenate the results in r order.
template <typename Fn>
auto partition_by_r(std::int64_t r_max, int threads, Fn fn) {
    using Result = decltype(fn(std::int64_t{1}));
    std::vector<Result> per_r(static_cast<std::size_t>(r_max));
    if (threads <= 1) {
        for (std::int64_t r = 1; r <= r_max; ++r)
            per_r[static_cast<std::size_t>(r - 1)] = fn(r);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::int64_t> next{1};
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::int64_t r = next.fetch_add(1);
                    if (r > r_max) return;
                    per_r[static_cast<std::size_t>(r - 1)] = fn(r);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    Result all;
    for (auto& chunk : per_r)
        all.insert(all.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    return all;
}

inline std::vector<SporadicSolution> search_one_r(const CanonicalEquation& eq,
                                                  const std::array<std::int64_t, 4>& ceil,
                                                  std::int64_t r) {
    std::vector<SporadicSolution> found;
    TermTable table(LucasParams(r), std::max<std::int64_t>(ceil[0], 1));

    // top-slot lookup: U value -> indices in [1, ceil[0]]
    std::map<BigInt, std::vector<std::int64_t>> by_value;
    for (std::int64_t k = 1; k <= ceil[0]; ++k) by_value[table.at(k)].push_back(k);

    const int arity = eq.arity;
    std::array<std::int64_t, 4> idx{{0, 0, 0, 0}};

    std::function<void(int, const BigInt&)> rec = [&](int s, const BigInt& partial) {
        if (s == 0) {
            BigInt target = -partial;
            if (target % eq.coeffs[0] != 0) return;
            target /= eq.coeffs[0];
            auto it = by_value.find(target);
            if (it == by_value.end()) return;
            std::int64_t lo = idx[1] + 1;  // top gap is always strict
            for (std::int64_t k1 : it->second) {
                if (k1 < lo) continue;
                idx[0] = k1;
                SporadicSolution sol;
                sol.r = r;
                for (int t = 0; t < arity; ++t) {
                    sol.indices[t] = idx[t];
                    sol.coeffs[t] = eq.coeffs[t];
                }
                sol.branch_tag = eq.branch_tag;
                found.push_back(std::move(sol));
            }
            return;
        }
        std::int64_t lo = s == arity - 1
                              ? 0
                              : idx[s + 1] + (eq.strict_gap[s] ? 1 : 0);
        for (std::int64_t k = lo; k <= ceil[s]; ++k) {
            idx[s] = k;
            if (eq.coeffs[s] == 0)
                rec(s - 1, partial);
            else
                rec(s - 1, partial + eq.coeffs[s] * table.at(k));
        }
    };
    rec(arity - 1, BigInt(0));
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace detail

/// Every bounded solution of eq, for every r in [1, bounds.r_max], sorted
/// lexicographically by (r, indices). Output is independent of thread count.
inline std::vector<SporadicSolution> search_sporadic(const CanonicalEquation& eq,
                                                     const BoundSet& bounds,
                                                     int threads = 1) {
    if (eq.arity < 2 || eq.coeffs[0] == 0) return {};
    auto ceil = detail::slot_ceilings(eq, bounds);
    return detail::partition_by_r(bounds.r_max, threads, [&](std::int64_t r) {
        return detail::search_one_r(eq, ceil, r);
    });
}

/// Independent recomputation of a solution's defining identity.
inline bool verify_solution(const SporadicSolution& sol) {
    if (sol.r < 1) return false;
    LucasParams params(sol.r);
    BigInt sum = 0;
    for (int s = 0; s < 4; ++s) {
        if (sol.indices[s] < 0) return false;
        sum += sol.coeffs[s] * lucas_term(params, sol.indices[s]);
    }
    return sum == 0;
}

/// Replication of the published numerical experiment: r in [1,14],
/// n4 in [0,4], n3 in [n4,12], n2 in [n3,21], eps4 in {0,1},
/// eps3, eps2 in {0,+1,-1}, seeking n1 > n2 with
/// U_{n1} = |eps2*U_{n2} + eps3*U_{n3} + eps4*U_{n4}|, n1 capped at 27.
///
/// Three tallies are reported. "tuple" counts every matching
/// (n4,n3,n2,eps,n1); "existence" counts each (n4,n3,n2,eps) with some
/// matching n1; "least-index" resolves |S| to the smallest index n1 with
/// U_{n1} = |S| and counts the tuple only when that n1 exceeds n2 (this is
/// the convention an inverse-lookup implementation lands on, and the one
/// the published totals match).
inline SearchReport search_paper_example(Convention convention = Convention::LeastIndex,
                                         int threads = 1) {
    constexpr std::int64_t n1_cap = 27;  // sporadic n1 ceiling at x = 1

    struct Hit {
        SporadicSolution sol;
        std::array<std::int64_t, 3> tallies;  // tuple, existence, least-index
    };

    auto run_r = [&](std::int64_t r) {
        std::vector<Hit> hits;
        TermTable table(LucasParams(r), n1_cap);
        std::map<BigInt, std::vector<std::int64_t>> by_value;
        std::map<BigInt, std::int64_t> least;
        for (std::int64_t k = n1_cap; k >= 0; --k) {
            by_value[table.at(k)].push_back(k);
            least[table.at(k)] = k;
        }
        for (auto& [value, ks] : by_value) std::sort(ks.begin(), ks.end());

        const std::array<std::int64_t, 2> eps4s{{0, 1}};
        const std::array<std::int64_t, 3> eps3s{{0, 1, -1}};
        for (std::int64_t n4 = 0; n4 <= 4; ++n4)
            for (std::int64_t n3 = n4; n3 <= 12; ++n3)
                for (std::int64_t n2 = n3; n2 <= 21; ++n2)
                    for (std::int64_t e4 : eps4s)
                        for (std::int64_t e3 : eps3s)
                            for (std::int64_t e2 : eps3s) {
                                BigInt signed_sum = e2 * table.at(n2) + e3 * table.at(n3) +
                                                    e4 * table.at(n4);
                                BigInt target = abs(signed_sum);
                                auto it = by_value.find(target);
                                if (it == by_value.end()) continue;
                                bool least_ok = least[target] > n2;
                                bool first_match = true;
                                for (std::int64_t n1 : it->second) {
                                    if (n1 <= n2) continue;
                                    Hit hit;
                                    hit.sol.r = r;
                                    hit.sol.indices = {n1, n2, n3, n4};
                                    std::int64_t flip = signed_sum >= 0 ? -1 : 1;
                                    hit.sol.coeffs = {1, flip * e2, flip * e3, flip * e4};
                                    hit.sol.branch_tag = "paper-repro";
                                    hit.tallies = {1, first_match ? 1 : 0,
                                                   least_ok && first_match ? 1 : 0};
                                    hits.push_back(std::move(hit));
                                    first_match = false;
                                }
                            }
        return hits;
    };

    auto hits = detail::partition_by_r(14, threads, run_r);

    SearchReport report;
    report.convention = convention;
    const int which = convention == Convention::Tuple ? 0
                      : convention == Convention::Existence ? 1
                                                            : 2;
    std::array<std::int64_t, 3> totals{{0, 0, 0}};
    for (const auto& hit : hits) {
        for (int t = 0; t < 3; ++t) totals[t] += hit.tallies[t];
        if (hit.tallies[which]) {
            report.per_r[hit.sol.r] += 1;
            report.solutions.push_back(hit.sol);
        }
    }
    report.convention_totals["tuple"] = totals[0];
    report.convention_totals["existence"] = totals[1];
    report.convention_totals["least-index"] = totals[2];
    report.total = totals[which];
    std::sort(report.solutions.begin(), report.solutions.end());
    return report;
}

}  // namespace lucas
