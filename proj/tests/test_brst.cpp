#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artifact/brst.hpp"
#include "oracles.hpp"

using namespace artifact;

namespace {

TheorySpec adjoint(int n, const StructureConstants& sc) {
    TheorySpec s;
    s.n = n;
    s.fields = {FieldFamily{"u", "p", {sc.dim}, 1}};
    s.lie = sc;
    s.action.kind = "adjoint";
    return s;
}

}  // namespace

TEST_CASE("charge parts") {
    PhaseSpace ps = build_phase_space(adjoint(2, levi_civita3()), Variant::GradedExtended);
    BrstCharge Q = build_brst_charge(ps, ChargeKind::Extended);
    CHECK(Q.form == Q.ghost + Q.current + Q.extension);
    CHECK(Q.form == oracle::upsilon(ps, nullptr));
    BrstCharge M = build_brst_charge(ps, ChargeKind::Minimal);
    CHECK(M.extension.is_zero());
    CHECK(bidegree(Q.form, 2).h == 1);
}

TEST_CASE("nilpotency ledger") {
    PhaseSpace ps = build_phase_space(adjoint(3, levi_civita3()), Variant::GradedExtended);
    Bracket br(ps);
    NilpotencyReport r = check_nilpotency(br, build_brst_charge(ps, ChargeKind::Extended));
    CHECK(r.is_zero);
    CHECK(r.value.is_zero());
    CHECK(r.jacobi + r.cancellation + r.extension == r.value);
    bool nonzero_entry = false;
    for (auto& e : r.ledger) nonzero_entry |= !e.value.is_zero();
    // the cancellation is between non-vanishing pair brackets
    CHECK(nonzero_entry);
}

TEST_CASE("Jacobi failure is reported with a witness") {
    StructureConstants sc(3);
    sc.at(0, 1, 2) = 1, sc.at(0, 2, 1) = -1;
    sc.at(1, 0, 1) = 1, sc.at(1, 1, 0) = -1;
    CHECK_FALSE(check_structure_constants(sc).jacobi);
    TheorySpec s = adjoint(2, sc);
    s.action.kind = "none";
    PhaseSpace ps = build_phase_space(s, Variant::Graded);
    try {
        build_brst_vector_field(ps, false);
        FAIL("expected JacobiFailure");
    } catch (const JacobiFailure& e) {
        for (int i : e.witness) CHECK((i >= 1 && i <= 3));
    }
}

TEST_CASE("lifted momentum observable") {
    TheorySpec s = adjoint(3, levi_civita3());
    s.action.kind = "opaque";
    s.action.base_components = true;
    PhaseSpace ps = build_phase_space(s, Variant::Plain);
    NoetherCurrent J = lift_momentum_observable(ps, ps.xi[1], 2);
    CHECK(J.form == oracle::delta(ps, 1));
    CHECK(J.form == lifted_observable_formula(ps, ps.xi[1]));
}

TEST_CASE("variation through hooks agrees with the bracket") {
    PhaseSpace ps = build_phase_space(adjoint(2, levi_civita3()), Variant::Graded);
    Bracket br(ps);
    BrstCharge Q = build_brst_charge(ps, ChargeKind::Minimal);
    for (int a = 0; a < 3; ++a) {
        Form F = oracle::mom(ps, ps.co.P[a]);
        Variation v = brst_variation(br, Q, F);
        CHECK_FALSE(v.bracket.is_zero());
        // {F,Q} = (-1)^{n-|F|} X_F -| X_Q -| Omega with |F| = n-1
        VectorField XF = br.X(F), XQ = br.X(Q.form);
        CHECK(v.bracket == -hook(XF, hook(XQ, ps.omega)));
        // odd X_F, X_Q: the two hooks commute
        CHECK(XF.parity() == 1);
        CHECK(XQ.parity() == 1);
        CHECK(v.hooked == hook(XF, hook(XQ, ps.omega)));
    }
}

TEST_CASE("generator action table") {
    PhaseSpace ps = build_phase_space(adjoint(2, levi_civita3()), Variant::Graded);
    Bracket br(ps);
    auto rows = reduction_generator_actions(br, build_brst_charge(ps, ChargeKind::Minimal));
    CHECK(rows.size() >= 6);
    for (auto& r : rows) {
        INFO(r.label);
        CHECK((r.ok || r.skipped));
    }
}

TEST_CASE("Koszul homology") {
    for (int dim = 1; dim <= 3; ++dim) {
        KoszulReport k = koszul_homology(dim);
        CHECK(k.ok);
        CHECK(k.betti.size() == (size_t)dim + 1);
        CHECK(k.betti[0] == 1);
    }
    KoszulReport a = koszul_homology(3, 4), b = koszul_homology(3, 4, {2, 0, 1});
    CHECK(a.betti == b.betti);
    CHECK(a.table == b.table);
    CHECK_THROWS_AS(koszul_homology(2, 1), TruncationError);
}

TEST_CASE("Koszul generator sign") {
    PhaseSpace ps = build_phase_space(adjoint(2, abelian(2)), Variant::GradedExtended);
    int s = koszul_generator_sign(Bracket(ps));
    CHECK((s == 1 || s == -1));
}
