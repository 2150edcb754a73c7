#include <algorithm>

#include <catch_amalgamated.hpp>

#include "lucas/normalize.hpp"
#include "lucas/oracle.hpp"
#include "lucas/solver.hpp"

using lucas::CanonicalEquation;
using lucas::ProblemSpec;

namespace {

const CanonicalEquation* find_branch(const std::vector<CanonicalEquation>& branches,
                                     const std::string& tag) {
    auto it = std::find_if(branches.begin(), branches.end(),
                           [&](const auto& eq) { return eq.branch_tag == tag; });
    return it == branches.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("spec invariants") {
    CHECK_THROWS_AS(ProblemSpec(0, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ProblemSpec(1, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("C = D = 0 gives a single degenerate branch") {
    auto branches = lucas::canonicalize(ProblemSpec(1, 1, 0, 0));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].degenerate);
    CHECK(branches[0].arity == 2);
    CHECK(branches[0].coeffs[0] == 1);
    CHECK(branches[0].coeffs[1] == 1);
    CHECK(branches[0].effective_x == 1);
}

TEST_CASE("A = C suppresses the n = n1 collision branch") {
    auto branches = lucas::canonicalize(ProblemSpec(1, 1, 1, 1));
    for (const auto& eq : branches)
        CHECK(eq.branch_tag.find("n=n1") == std::string::npos);
    // distinct-ordering branches still present, e.g. n > n1 > m > m1
    CHECK(find_branch(branches, "n>n1>m>m1") != nullptr);
    CHECK(find_branch(branches, "n1>n>m1>m") != nullptr);
}

TEST_CASE("collision branch for A != C") {
    auto branches = lucas::canonicalize(ProblemSpec(2, 1, 1, 0));
    const auto* collision = find_branch(branches, "n=n1>m");
    REQUIRE(collision != nullptr);
    CHECK(collision->arity == 2);
    CHECK(collision->coeffs[0] == 1);  // a - c
    CHECK(collision->coeffs[1] == 1);
    CHECK(collision->degenerate);
    CHECK(collision->effective_x == 4);  // doubled

    const auto* strict = find_branch(branches, "n>n1>m");
    REQUIRE(strict != nullptr);
    CHECK(strict->arity == 3);
    CHECK(strict->coeffs[0] == 2);
    CHECK(strict->coeffs[1] == -1);
    CHECK(strict->coeffs[2] == 1);
    CHECK(strict->effective_x == 2);
}

TEST_CASE("merged coefficient may vanish but branch survives") {
    // a = d: tying n with m1 cancels the shared slot
    auto branches = lucas::canonicalize(ProblemSpec(1, 2, 1, 1));
    const auto* eq = find_branch(branches, "n1>n=m1>m");
    REQUIRE(eq != nullptr);
    CHECK(eq->coeffs[0] == -1);
    CHECK(eq->coeffs[1] == 0);
    CHECK(eq->coeffs[2] == 2);
    CHECK(eq->nonzero_count() == 2);
}

TEST_CASE("every branch respects the effective_x floor") {
    for (auto spec : {ProblemSpec(1, 1, 1, 1), ProblemSpec(2, -1, 1, 2),
                      ProblemSpec(1, 2, 0, -2), ProblemSpec(-2, 2, 2, 1)}) {
        for (const auto& eq : lucas::canonicalize(spec))
            CHECK(eq.effective_x >= spec.x());
    }
}

TEST_CASE("denormalize rejects constraint violations") {
    ProblemSpec spec(1, 1, 1, 1);
    auto branches = lucas::canonicalize(spec);
    const auto* eq = find_branch(branches, "n1>n>m1>m");
    REQUIRE(eq != nullptr);
    // r=1: U_4 + U_1 = U_5? 3+1 != 5; pick a genuine hit instead: F case
    // U_3 + U_1 = U_4 + U_0? 2+1 = 3+0: n=3,m=1,n1=4,m1=0 fits n1>n>m1... m1=0<m=1,
    // wrong branch; just check that a non-solution maps to nullopt
    lucas::CanonicalSolution bogus{1, {5, 4, 2, 1}};
    CHECK(!lucas::denormalize(bogus, *eq, spec).has_value());
}

TEST_CASE("round trip: denormalized solutions satisfy the original equation") {
    ProblemSpec spec(1, 1, 1, 1);
    auto box = lucas::box_bounds(3, 10);
    for (const auto& eq : lucas::canonicalize(spec)) {
        for (const auto& hit : lucas::search_sporadic(eq, box)) {
            lucas::CanonicalSolution canon{hit.r, hit.indices};
            auto orig = lucas::denormalize(canon, eq, spec);
            if (!orig) continue;
            lucas::LucasParams params(orig->r);
            lucas::BigInt lhs = spec.a * lucas::lucas_term(params, orig->n) +
                                spec.b * lucas::lucas_term(params, orig->m);
            lucas::BigInt rhs = spec.c * lucas::lucas_term(params, orig->n1) +
                                spec.d * lucas::lucas_term(params, orig->m1);
            CHECK(lhs == rhs);
            CHECK(orig->n > orig->m);
            CHECK(orig->n1 > orig->m1);
        }
    }
}

TEST_CASE("pipeline completeness against the original-space oracle") {
    // hand-picked specs covering collisions, cancellations, and degenerate cases
    std::vector<ProblemSpec> specs = {
        ProblemSpec(1, 1, 1, 1),   ProblemSpec(1, 1, 0, 0),  ProblemSpec(1, -1, 0, 0),
        ProblemSpec(2, 1, 1, 0),   ProblemSpec(1, 1, 2, 0),  ProblemSpec(1, 2, 2, 1),
        ProblemSpec(1, 1, 1, 2),   ProblemSpec(1, -1, 1, -1), ProblemSpec(2, -1, 1, 1),
        ProblemSpec(1, 2, -1, 2),  ProblemSpec(-1, 1, 1, -2), ProblemSpec(2, 2, 1, -1),
        ProblemSpec(1, 1, 0, 2),   ProblemSpec(2, -2, 1, 0),
    };
    for (const auto& spec : specs) {
        INFO("A=" << spec.a << " B=" << spec.b << " C=" << spec.c << " D=" << spec.d);
        CHECK(lucas::solve_matches_oracle(spec, 3, 12));
    }
}
