#pragma once
// BRST vector field and charge, nilpotency, generator actions, Koszul homology.

#include <array>
#include <string>
#include <vector>

#include "artifact/phase.hpp"

namespace artifact {

struct NoetherCurrent {
    int a = 0;  // 1-based algebra index, 0 for an ad hoc generator
    Form form;
};

// delta(xi); checks the result against the coordinate formula
// (p_i^al xi^i + p xi^al) v_al - p_i^al xi^be du^i v_albe.
NoetherCurrent lift_momentum_observable(const PhaseSpace& ps, const VectorField& xi, int a = 0);
// the same formula written out term by term, used as the construction check
Form lifted_observable_formula(const PhaseSpace& ps, const VectorField& xi);

struct JacobiFailure : Error {
    std::array<int, 4> witness;  // (a, b, c, d), 1-based
    JacobiFailure(const std::string& m, std::array<int, 4> w) : Error(m), witness(w) {}
};

// V = eta^a xi_a - 1/2 C^c_ab eta^a eta^b d/deta^c (+ rho^a d/dlambda^a).
// With check set, Jacobi is tested first and [V,V] = 0 verified.
VectorField build_brst_vector_field(const PhaseSpace& ps, bool extended, bool check = true);

enum class ChargeKind { Minimal, Extended };

struct BrstCharge {
    ChargeKind kind = ChargeKind::Minimal;
    Form form;
    // form = ghost + current + extension
    Form ghost;      // 1/2 C^a_bc eta^b eta^c P_a
    Form current;    // eta^a delta(xi_a)
    Form extension;  // rho^a B_a
    std::optional<Expr> H;  // set when the parts were pulled back by p = -H
};

// Builds the coordinate charge and checks it against delta(V).  When the phase
// space has an affine p and a Hamiltonian is given, every part is pulled back by p = -H.
BrstCharge build_brst_charge(const PhaseSpace& ps, ChargeKind kind, const Expr* H = nullptr);

struct LedgerEntry {
    std::string group;  // jacobi | cancellation | extension
    std::string pair;   // e.g. "ghost,current"
    Form value;
};

struct NilpotencyReport {
    Form value;
    bool is_zero = false;
    std::vector<LedgerEntry> ledger;
    Form jacobi, cancellation, extension;  // group sums
};

NilpotencyReport check_nilpotency(const Bracket& br, const BrstCharge& Q);

struct Variation {
    Form hooked;   // X(Q) -| X(F) -| Omega
    Form bracket;  // {F, Q}
};
Variation brst_variation(const Bracket& br, const BrstCharge& Q, const Form& F);

struct GeneratorRow {
    std::string label;
    Form computed;
    Form expected;
    bool ok = false;
    bool skipped = false;  // observable not Hamiltonian on this omega
};

// {eta^a,Q}, {P_a,Q} and {F,Q} for F in the field observables u^i v_al and p_i.
std::vector<GeneratorRow> reduction_generator_actions(const Bracket& br, const BrstCharge& Q);

struct KoszulReport {
    int dim = 0;
    int cap = 0;
    std::vector<long> betti;  // by antighost number 0..dim
    // per antighost number and weight: (dim K, rank d_out)
    std::vector<std::vector<std::pair<long, long>>> table;
    bool ok = false;  // betti == [1, 0, ..., 0]
};

struct TruncationError : Error {
    using Error::Error;
};

// Complex S(B) (x) Lambda(C) on dim pairs with d C_a = s B_a, graded by the number of
// C factors and truncated at total weight cap (d preserves weight, so every slice is
// closed).  cap < dim is rejected because higher degrees would not be reached.
// order permutes the generator labels (ordering-independence check).
KoszulReport koszul_homology(int dim, int cap = -1, const std::vector<int>& order = {});

// Sign s with {C_a, rho^b B_b} = s B_a on a graded-extended space; also checks
// {B_a, rho^b B_b} = 0.  Throws if the bracket does not have this shape.
int koszul_generator_sign(const Bracket& br);

}  // namespace artifact
