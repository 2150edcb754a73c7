#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lucas/bounds.hpp"
#include "lucas/normalize.hpp"
#include "lucas/parametric.hpp"
#include "lucas/solver.hpp"
#include "lucas/sporadic.hpp"

namespace lucas {

using Json = nlohmann::ordered_json;

inline Json bounds_to_json(const BoundSet& b) {
    return Json{{"x", b.x},
                {"r_max", b.r_max},
                {"n4_max", b.n4_max},
                {"n3_max", b.n3_max},
                {"n2_max", b.n2_max},
                {"n1_max", b.n1_max},
                {"tri_i_max", b.tri_i_max},
                {"tri_j_max", b.tri_j_max},
                {"quad_i_max", b.quad_i_max},
                {"quad_j_max", b.quad_j_max},
                {"quad_k_max", b.quad_k_max},
                {"cd_zero_n_max", b.cd_zero_n_max}};
}

inline Json family_to_json(const ParametricFamily& fam) {
    return Json{{"r", fam.r},
                {"kind", fam.kind},
                {"exponents", fam.exponents},
                {"coeffs", fam.coeffs}};
}

inline Json solve_report_json(const ProblemSpec& spec, const SolveResult& result) {
    Json doc;
    doc["equation"] = Json{{"A", spec.a}, {"B", spec.b}, {"C", spec.c}, {"D", spec.d}};
    doc["bounds"] = bounds_to_json(result.bounds);
    doc["convention"] = "tuple";
    doc["sporadic"] = Json::array();
    for (const auto& s : result.sporadic)
        doc["sporadic"].push_back(Json{{"r", s.r},
                                       {"n", s.n},
                                       {"m", s.m},
                                       {"n1", s.n1},
                                       {"m1", s.m1},
                                       {"branch", s.branch}});
    doc["families"] = Json::array();
    for (const auto& fam : result.families) doc["families"].push_back(family_to_json(fam));
    if (result.self_check_ran) doc["self_check"] = result.self_check_ok ? "ok" : "mismatch";
    return doc;
}

inline Json paper_report_json(const SearchReport& report,
                              const std::vector<ParametricFamily>& families) {
    Json doc;
    doc["bounds"] = bounds_to_json(all_bounds(1));
    doc["convention"] = convention_name(report.convention);
    doc["convention_totals"] = report.convention_totals;
    doc["total"] = report.total;
    Json per_r = Json::object();
    for (const auto& [r, count] : report.per_r) per_r[std::to_string(r)] = count;
    doc["per_r"] = per_r;
    doc["sporadic"] = Json::array();
    for (const auto& s : report.solutions)
        doc["sporadic"].push_back(Json{{"r", s.r},
                                       {"n1", s.indices[0]},
                                       {"n2", s.indices[1]},
                                       {"n3", s.indices[2]},
                                       {"n4", s.indices[3]},
                                       {"coeffs", s.coeffs}});
    doc["families"] = Json::array();
    for (const auto& fam : families) doc["families"].push_back(family_to_json(fam));
    return doc;
}

inline std::string solve_report_csv(const SolveResult& result) {
    std::ostringstream out;
    out << "r,n,m,n1,m1,branch\n";
    for (const auto& s : result.sporadic)
        out << s.r << ',' << s.n << ',' << s.m << ',' << s.n1 << ',' << s.m1 << ','
            << s.branch << '\n';
    return out.str();
}

inline std::string paper_report_csv(const SearchReport& report) {
    std::ostringstream out;
    out << "r,n1,n2,n3,n4,a1,a2,a3,a4\n";
    for (const auto& s : report.solutions) {
        out << s.r;
        for (auto k : s.indices) out << ',' << k;
        for (auto c : s.coeffs) out << ',' << c;
        out << '\n';
    }
    return out.str();
}

/// Re-verify every solution and family in a previously emitted report.
/// Returns a list of human-readable failures; empty means the report is
/// internally consistent.
inline std::vector<std::string> verify_report(const Json& doc,
                                              std::int64_t family_depth = 500) {
    std::vector<std::string> failures;

    std::int64_t A = 0, B = 0, C = 0, D = 0;
    bool have_eq = doc.contains("equation");
    if (have_eq) {
        A = doc["equation"]["A"].get<std::int64_t>();
        B = doc["equation"]["B"].get<std::int64_t>();
        C = doc["equation"]["C"].get<std::int64_t>();
        D = doc["equation"]["D"].get<std::int64_t>();
    }

    if (doc.contains("sporadic")) {
        std::size_t row = 0;
        for (const auto& entry : doc["sporadic"]) {
            ++row;
            std::int64_t r = entry["r"].get<std::int64_t>();
            if (entry.contains("n")) {
                // original-form entry
                auto n = entry["n"].get<std::int64_t>();
                auto m = entry["m"].get<std::int64_t>();
                auto n1 = entry["n1"].get<std::int64_t>();
                auto m1 = entry["m1"].get<std::int64_t>();
                if (!have_eq) {
                    failures.push_back("sporadic row " + std::to_string(row) +
                                       ": original-form entry without equation header");
                    continue;
                }
                bool ok = r >= 1 && n > m && m >= 0 && n1 > m1 && m1 >= 0;
                if (ok) {
                    LucasParams params(r);
                    BigInt un = lucas_term(params, n), um = lucas_term(params, m);
                    BigInt un1 = lucas_term(params, n1), um1 = lucas_term(params, m1);
                    ok = A * un + B * um - C * un1 - D * um1 == 0 && A * un != C * un1;
                }
                if (!ok)
                    failures.push_back("sporadic row " + std::to_string(row) +
                                       ": constraint or identity check failed");
            } else {
                // canonical entry
                SporadicSolution sol;
                sol.r = r;
                sol.indices = {entry["n1"].get<std::int64_t>(),
                               entry["n2"].get<std::int64_t>(),
                               entry["n3"].get<std::int64_t>(),
                               entry["n4"].get<std::int64_t>()};
                for (std::size_t t = 0; t < 4; ++t)
                    sol.coeffs[t] = entry["coeffs"][t].get<std::int64_t>();
                bool ok = sol.indices[0] > sol.indices[1] &&
                          sol.indices[1] >= sol.indices[2] &&
                          sol.indices[2] >= sol.indices[3] && sol.indices[3] >= 0 &&
                          verify_solution(sol);
                if (!ok)
                    failures.push_back("sporadic row " + std::to_string(row) +
                                       ": canonical solution check failed");
            }
        }
    }

    if (doc.contains("families")) {
        std::size_t row = 0;
        for (const auto& entry : doc["families"]) {
            ++row;
            ParametricFamily fam;
            fam.r = entry["r"].get<std::int64_t>();
            fam.kind = entry["kind"].get<std::string>();
            fam.exponents = entry["exponents"].get<std::vector<std::int64_t>>();
            fam.coeffs = entry["coeffs"].get<std::vector<std::int64_t>>();
            bool ok = fam.r >= 1 && !fam.exponents.empty() &&
                      fam.exponents.size() == fam.coeffs.size() &&
                      fam.exponents.back() == 0 &&
                      is_multiple(fam.coeffs, fam.exponents, LucasParams(fam.r)) &&
                      verify_family(fam, family_depth);
            if (!ok)
                failures.push_back("family row " + std::to_string(row) +
                                   ": verification failed");
        }
    }
    return failures;
}

}  // namespace lucas
