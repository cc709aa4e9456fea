#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artifact/properties.hpp"

using namespace artifact;

namespace {

TheorySpec su2(int n) {
    TheorySpec s;
    s.n = n;
    s.fields = {FieldFamily{"u", "p", {3}, 1}};
    s.lie = levi_civita3();
    s.action.kind = "adjoint";
    return s;
}

}  // namespace

TEST_CASE("suite is deterministic per seed") {
    auto a = run_property_suite({7, 12}), b = run_property_suite({7, 12});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].law == b[i].law);
        CHECK(a[i].instances == b[i].instances);
        CHECK(a[i].failures == 0);
    }
}

TEST_CASE("other seeds pass") {
    for (uint64_t seed : {2u, 3u, 99u})
        for (auto& r : run_property_suite({seed, 20})) {
            INFO(r.law << " seed " << seed << ": " << r.first_failure);
            CHECK(r.failures == 0);
            CHECK(r.instances >= 20);
        }
}

TEST_CASE("generator shapes") {
    PhaseSpace ps = build_phase_space(su2(3), Variant::GradedExtended);
    FormGen g(ps, 5);
    for (int i = 0; i < 200; ++i) {
        CHECK(g.coefficient() != 0);
        int k = g.uniform(0, 3);
        CHECK((k >= 0 && k <= 3));
        int p = g.uniform(0, 1);
        Form f = g.form(k, p, 3);
        if (f.is_zero()) continue;
        CHECK(f.max_form_degree() == k);
        CHECK(f.min_form_degree() == k);
        CHECK(f.parity() == p);
    }
    for (int i = 0; i < 100; ++i) {
        int h = i % 2;
        Expr c = g.config_function(h);
        if (!c.is_zero()) {
            CHECK(c.max_form_degree() == 0);
            CHECK(c.parity() == h);
        }
        VectorField X = g.vector_field(h, 3);
        if (!X.is_zero()) CHECK(X.parity() == h);
    }
}

TEST_CASE("observables have the requested parity and degree") {
    TheorySpec s = su2(2);
    s.ghosts = true;
    PhaseSpace ps = build_phase_space(s, Variant::Vertical);
    FormGen g(ps, 11);
    for (int i = 0; i < 100; ++i) {
        int h = i % 2;
        Form F = g.observable(h);
        REQUIRE_FALSE(F.is_zero());
        BiDegree b = bidegree(F, 2);
        CHECK(b.g == 0);
        CHECK(b.h == h);
    }
}
