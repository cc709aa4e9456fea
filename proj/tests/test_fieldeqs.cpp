#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artifact/fieldeqs.hpp"
#include "oracles.hpp"

using namespace artifact;

namespace {

TheorySpec scalar(int n, const std::string& H) {
    TheorySpec s;
    s.n = n;
    s.fields = {FieldFamily{"u", "p", {1}, 1}};
    s.lie = abelian(1);
    s.hamiltonian = H;
    return s;
}

Expr jet(const PhaseSpace& ps, int g, int al) { return ps.X(ps.co.jet.at(g)[al]); }

}  // namespace

TEST_CASE("de Donder-Weyl equations of the Klein-Gordon field") {
    PhaseSpace ps = build_phase_space(scalar(2, "1/2*p[1,0]^2 - 1/2*p[1,1]^2 + 1/2*u[1]^2"), Variant::Plain);
    EquationSet es = derive_hamilton_equations(ps, *ps.H);
    int u = ps.co.u[0], p0 = ps.co.pu[0][0], p1 = ps.co.pu[0][1];
    const Equation* eu = es.find("d/d" + ps.c().gen(u).label);
    REQUIRE(eu);
    CHECK(eu->lhs == jet(ps, p0, 0) + jet(ps, p1, 1));
    CHECK(eu->rhs == -ps.X(u));
    const Equation* e0 = es.find("d/d" + ps.c().gen(p0).label);
    REQUIRE(e0);
    CHECK(e0->lhs == jet(ps, u, 0));
    CHECK(e0->rhs == ps.X(p0));
    const Equation* e1 = es.find("d/d" + ps.c().gen(p1).label);
    REQUIRE(e1);
    CHECK(e1->rhs == -ps.X(p1));
    for (auto& e : es.eqs) CHECK(e.contraction == (e.lhs - e.rhs) * e.scale);
}

TEST_CASE("general Hamiltonian gives -dH/du and dH/dp") {
    for (int n : {2, 3}) {
        PhaseSpace ps = build_phase_space(scalar(n, "opaque"), Variant::Plain);
        EquationSet es = derive_hamilton_equations(ps, *ps.H);
        int u = ps.co.u[0];
        CHECK(es.find("d/d" + ps.c().gen(u).label)->rhs == -partial(*ps.H, u));
        for (int al = 0; al < n; ++al) {
            int p = ps.co.pu[0][al];
            CHECK(es.find("d/d" + ps.c().gen(p).label)->rhs == partial(*ps.H, p));
        }
    }
}

TEST_CASE("ghost sector equations") {
    TheorySpec s = scalar(2, "");
    s.lie = levi_civita3();
    s.fields = {FieldFamily{"u", "p", {3}, 1}};
    s.action.kind = "adjoint";
    PhaseSpace ps = build_phase_space(s, Variant::GradedExtended);
    Expr H = ps.X(ps.co.u[0]) * ps.X(ps.co.u[0]);
    EquationSet es = derive_hamilton_equations(ps, H);
    // one equation per configuration coordinate and per momentum component
    CHECK(es.eqs.size() == (3 + 3 + 3 + 3) * 3);
    for (auto& e : es.eqs) CHECK(e.contraction == (e.lhs - e.rhs) * e.scale);
    CHECK(es.find("d/d" + ps.c().gen(ps.co.eta[0]).label)->rhs.is_zero());
}

TEST_CASE("total derivative and prolongation") {
    PhaseSpace ps = build_phase_space(scalar(2, ""), Variant::Plain);
    int u = ps.co.u[0], x0 = ps.co.x[0];
    Expr e = ps.X(u) * ps.X(u) * ps.X(x0);
    CHECK(total_derivative(ps, e, 0) == ps.X(u) * ps.X(u) + ps.X(u) * ps.X(x0) * jet(ps, u, 0) * Q(2));
    CHECK(total_derivative(ps, e, 1) == ps.X(u) * ps.X(x0) * jet(ps, u, 1) * Q(2));
    Form f = ps.D(u) * ps.v(0);
    CHECK(prolong(ps, f) == jet(ps, u, 0) * ps.vn());
    CHECK(volume_coefficient(ps, prolong(ps, f)) == jet(ps, u, 0));
    CHECK_THROWS(total_derivative(ps, jet(ps, u, 0), 1));
}

TEST_CASE("Lagrange-d'Alembert variant") {
    TheorySpec s = scalar(2, "opaque");
    s.action.kind = "opaque";
    PhaseSpace ps = build_phase_space(s, Variant::LagrangeDAlembert);
    CHECK_THROWS(derive_hamilton_equations(ps, *ps.H));
    EquationSet es = derive_lda_equations(ps, *ps.H);
    oracle::Eq w = oracle::lda_u(ps, 0, *ps.H);
    const Equation* e = es.find("d/d" + ps.c().gen(ps.co.u[0]).label);
    REQUIRE(e);
    CHECK(e->lhs == w.lhs);
    CHECK(e->rhs == w.rhs);
    const Equation* nl = es.find("d/d" + ps.c().gen(ps.co.lam[0]).label);
    REQUIRE(nl);
    CHECK(nl->current.size() == 2);
}

TEST_CASE("Minkowski metric") {
    MinkowskiMetric g;
    CHECK(g(0, 0) == 1);
    CHECK(g(2, 2) == -1);
    CHECK(g(0, 3) == 0);
}
