#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artifact/phase.hpp"
#include "oracles.hpp"

using namespace artifact;

namespace {

TheorySpec scalar(int n, int fields = 1) {
    TheorySpec s;
    s.n = n;
    s.fields = {FieldFamily{"u", "p", {fields}, 1}};
    s.lie = abelian(1);
    return s;
}

TheorySpec su2(int n) {
    TheorySpec s;
    s.n = n;
    s.fields = {FieldFamily{"u", "p", {3}, 1}};
    s.lie = levi_civita3();
    s.action.kind = "adjoint";
    return s;
}

}  // namespace

TEST_CASE("omega is minus d theta in every variant") {
    for (Variant v : {Variant::Plain, Variant::MultiplierExtended, Variant::Graded, Variant::GradedExtended,
                      Variant::Vertical}) {
        PhaseSpace ps = build_phase_space(su2(3), v);
        CHECK(ps.omega == -d(ps.theta));
        CHECK(d(ps.omega).is_zero());
    }
}

TEST_CASE("variant names round trip") {
    for (Variant v : {Variant::Plain, Variant::MultiplierExtended, Variant::Graded, Variant::GradedExtended,
                      Variant::Vertical, Variant::LagrangeDAlembert}) {
        Variant w;
        REQUIRE(variant_from_name(variant_name(v), w));
        CHECK(w == v);
    }
    Variant w;
    CHECK_FALSE(variant_from_name("symplectic", w));
}

TEST_CASE("coordinate families per variant") {
    PhaseSpace plain = build_phase_space(su2(2), Variant::Plain);
    CHECK(plain.co.lam.empty());
    CHECK(plain.co.eta.empty());
    CHECK(plain.co.p >= 0);
    PhaseSpace ge = build_phase_space(su2(2), Variant::GradedExtended);
    CHECK(ge.co.lam.size() == 3);
    CHECK(ge.co.eta.size() == 3);
    CHECK(ge.co.rho.size() == 3);
    CHECK(ge.c().gen(ge.co.eta[0]).odd);
    CHECK(ge.c().gen(ge.co.P[0][1]).odd);
    CHECK_FALSE(ge.c().gen(ge.co.B[0][1]).odd);
    PhaseSpace vert = build_phase_space(su2(2), Variant::Vertical);
    CHECK(vert.co.p < 0);
}

TEST_CASE("lifted observable matches the coordinate formula") {
    TheorySpec s = su2(3);
    PhaseSpace ps = build_phase_space(s, Variant::Plain);
    for (int a = 0; a < 3; ++a) CHECK(ps.delta(a) == oracle::delta(ps, a));
}

TEST_CASE("pull back by a section") {
    TheorySpec s = scalar(2);
    s.hamiltonian = "1/2*p[1,0]^2 + 1/2*u[1]^2";
    PhaseSpace ps = build_phase_space(s, Variant::Plain);
    Form om = pull_back_section(ps, *ps.H);
    // dp -> -dH
    Form want = d(*ps.H) * ps.vn() + ps.D(ps.co.u[0]) * ps.D(ps.co.pu[0][0]) * ps.v(0) +
                ps.D(ps.co.u[0]) * ps.D(ps.co.pu[0][1]) * ps.v(1);
    CHECK(om == want);
    PhaseSpace vert = build_phase_space(scalar(2), Variant::Vertical);
    CHECK_THROWS_AS(pull_back_section(vert, vert.one()), SectionError);
}

TEST_CASE("momentum observables are hamiltonian") {
    PhaseSpace ps = build_phase_space(su2(2), Variant::Graded);
    Bracket br(ps);
    for (int a = 0; a < 3; ++a) {
        VectorField X = br.X(oracle::mom(ps, ps.co.P[a]));
        // X_{P_a} = -+ d/d eta^a up to sign
        REQUIRE(X.comps().size() == 1);
        CHECK(X.comp(ps.co.eta[a]) != nullptr);
    }
}

TEST_CASE("structural solver reports a witness for non-hamiltonian forms") {
    PhaseSpace ps = build_phase_space(scalar(2), Variant::Plain);
    // u p_1^0 d^1x_0 is not Hamiltonian
    Form F = ps.X(ps.co.u[0]) * ps.X(ps.co.pu[0][0]) * ps.v(0);
    SolveResult r = solve_structural(ps, F);
    CHECK_FALSE(r.hamiltonian);
    CHECK_FALSE(r.witness.is_zero());
    CHECK_FALSE(r.witness_text.empty());
    Bracket br(ps);
    CHECK_THROWS_AS(br.X(F), NotHamiltonian);
}

TEST_CASE("degree cap") {
    PhaseSpace ps = build_phase_space(su2(3), Variant::GradedExtended);
    SolveOptions opt;
    opt.degree_cap = 0;
    Form F = ps.X(ps.co.u[0]) * ps.X(ps.co.u[1]) * ps.X(ps.co.u[2]) * ps.X(ps.co.eta[0]) * ps.v(0);
    CHECK_THROWS_AS(solve_structural(ps, F, opt), CapExceeded);
}

TEST_CASE("canonical brackets") {
    PhaseSpace ps = build_phase_space(scalar(3, 2), Variant::Vertical);
    Bracket br(ps);
    for (int i = 0; i < 2; ++i)
        for (int al = 0; al < 3; ++al) {
            Form u = ps.X(ps.co.u[i]) * ps.v(al);
            for (int j = 0; j < 2; ++j) {
                Form pj = oracle::mom(ps, ps.co.pu[j]);
                Form b = br(u, pj);
                if (i == j)
                    CHECK_FALSE(b.is_zero());
                else
                    CHECK(b.is_zero());
            }
        }
}

TEST_CASE("bidegree") {
    PhaseSpace ps = build_phase_space(su2(3), Variant::Graded);
    BiDegree b = bidegree(ps.X(ps.co.eta[0]) * ps.v(1), 3);
    CHECK(b.g == 0);
    CHECK(b.h == 1);
    b = bidegree(ps.X(ps.co.u[0]), 3);
    CHECK(b.g == 2);
    CHECK(b.h == 0);
}

TEST_CASE("constraint ideal") {
    PhaseSpace ps = build_phase_space(scalar(2, 2), Variant::Plain);
    Expr u1 = ps.X(ps.co.u[0]), u2 = ps.X(ps.co.u[1]), p = ps.X(ps.co.pu[0][0]);
    ConstraintIdeal I({u1 - u2 * Q(2)});
    CHECK(I.weakly_zero(u1 * p - u2 * p * Q(2)));
    CHECK_FALSE(I.weakly_zero(u1));
    CHECK(I.reduce(u1 + u2) == I.reduce(u2 * Q(3)));
}

TEST_CASE("parser") {
    PhaseSpace ps = build_phase_space(su2(2), Variant::GradedExtended);
    const Chart& c = ps.c();
    CHECK(parse_expr(c, "u[1]*u[2] - 1/2*p[3,1]^2") ==
          ps.X(ps.co.u[0]) * ps.X(ps.co.u[1]) - ps.X(ps.co.pu[2][1]) * ps.X(ps.co.pu[2][1]) * Q(1, 2));
    CHECK(parse_expr(c, "eta[1]*eta[1]").is_zero());
    CHECK(parse_expr(c, "d(u[1]) * vol1(0)") == ps.D(ps.co.u[0]) * ps.v(0));
    CHECK(parse_gen_ref(c, "rho[2]") == ps.co.rho[1]);
    CHECK_THROWS_AS(parse_expr(c, "u[4]"), ParseError);
    CHECK_THROWS_AS(parse_expr(c, "u[1] u[2]"), ParseError);
    CHECK_THROWS_AS(parse_expr(c, "u[1] +"), ParseError);
    CHECK_THROWS_AS(parse_expr(c, "1/0"), ParseError);
}

TEST_CASE("build errors") {
    TheorySpec s = su2(2);
    s.action.kind = "rotation";
    CHECK_THROWS_AS(build_phase_space(s, Variant::Plain), BuildError);
    s = su2(0);
    CHECK_THROWS_AS(build_phase_space(s, Variant::Plain), BuildError);
}
