#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "artifact/ym.hpp"

using namespace artifact;

namespace {

const YmReport& report() {
    static const YmReport r = yang_mills_suite();
    return r;
}

// Displays that disagree with the computation; their status is reported by the
// acceptance binary, not asserted here.
const std::set<std::string> kDisputed = {
    "T.vector_field", "T.abelian", "S.algebra", "omega.H", "eom.contraction-F", "eom.displayed-1",
    "eom.displayed-2", "bracket.A-F", "bracket.eta-P", "bracket.rho-C", "variation.A", "variation.P"};

}  // namespace

TEST_CASE("computed tables match the golden files") {
    for (auto& g : compare_goldens(report(), golden_dir(ARTIFACT_GOLDEN_DIR_DEFAULT))) {
        INFO(g.id << ": " << g.first_diff);
        CHECK(g.present);
        CHECK(g.match);
    }
}

TEST_CASE("undisputed displays agree") {
    for (auto& c : report().checks) {
        if (kDisputed.count(c.id)) continue;
        INFO(c.id << ": " << c.mismatch);
        CHECK(c.pass);
    }
}

TEST_CASE("table shapes") {
    const YmReport& r = report();
    CHECK(r.dim == 3);
    CHECK(r.checks.size() == 34);
    // lambda-B: one row per (a, b, mu)
    const YmCheck* lb = r.find("bracket.lambda-B");
    REQUIRE(lb);
    CHECK(lb->lines.size() == 3 * 3 * 4);
    for (auto& c : r.checks) CHECK_FALSE(c.lines.empty());
}

TEST_CASE("spec builder") {
    TheorySpec s = yang_mills_spec(levi_civita3());
    CHECK(s.n == 4);
    CHECK(s.multipliers);
    CHECK(s.ghosts);
    CHECK(s.antighosts);
    CHECK(s.lie.at(0, 1, 2) == -1);
    TheorySpec g = yang_mills_spec(levi_civita3(), Variant::Graded, false);
    CHECK_FALSE(g.antighosts);
}

TEST_CASE("golden directory override") {
    setenv("ARTIFACT_GOLDEN_DIR", "/tmp/elsewhere", 1);
    CHECK(golden_dir("fallback") == "/tmp/elsewhere");
    unsetenv("ARTIFACT_GOLDEN_DIR");
    CHECK(golden_dir("fallback") == "fallback");
}
