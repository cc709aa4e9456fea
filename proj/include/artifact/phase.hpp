#pragma once
// Phase spaces, Cartan forms, the structural-equation solver and the bracket.

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "artifact/calc.hpp"

namespace artifact {

enum class Variant { Plain, MultiplierExtended, Graded, GradedExtended, Vertical, LagrangeDAlembert };

const char* variant_name(Variant v);
bool variant_from_name(const std::string& s, Variant& out);

struct FieldFamily {
    std::string name = "u";
    std::string momentum = "p";
    std::vector<int> ranges{1};  // internal ranges first (1-based), then spacetime (0-based)
    int n_internal = 1;
};

// Generator action xi_a on the configuration bundle.
struct ActionSpec {
    // none | adjoint | translation | opaque | explicit
    std::string kind = "none";
    // explicit: per a, (generator reference text, expression text)
    std::vector<std::vector<std::pair<std::string, std::string>>> components;
    bool base_components = false;  // opaque: also register xi^alpha_a(x)
};

struct TheorySpec {
    int n = 2;
    std::vector<FieldFamily> fields{FieldFamily{}};
    StructureConstants lie;
    ActionSpec action;
    bool multipliers = false;
    bool ghosts = false;
    bool antighosts = false;
    // expression text in chart generators, "opaque" for a general H, empty for none
    std::string hamiltonian;
    Variant variant = Variant::Plain;
    std::string name;
};

// Ids of every coordinate family.
struct Coords {
    std::vector<int> x;                       // by base index
    std::vector<int> u;                       // flattened field generators
    std::vector<std::vector<int>> pu;         // pu[k][alpha] momentum of u[k]
    std::vector<int> lam, eta, rho;           // by algebra index
    std::vector<std::vector<int>> B, P, C;    // [a][alpha]
    int p = -1;
    std::map<int, std::vector<int>> jet;      // fiber generator -> jet symbols by alpha
};

class PhaseSpace {
public:
    ChartPtr chart;
    Variant variant = Variant::Plain;
    TheorySpec spec;
    Coords co;
    Form theta, omega;
    Form theta_canonical;  // the canonical n-form; differs from theta only for lagrange-dalembert
    std::vector<VectorField> xi;  // configuration-bundle action, one per algebra basis element
    std::optional<Expr> H;        // parsed Hamiltonian when given

    const Chart& c() const { return *chart; }
    int n() const { return chart->n(); }
    bool vertical() const { return variant == Variant::Vertical; }

    Expr X(int id) const { return Expr::coord(*chart, id); }
    Expr D(int id) const { return Expr::diff(*chart, id); }
    Expr one() const { return Expr(chart.get(), 1); }
    Expr zero() const { return Expr(chart.get()); }
    Form v(int a) const { return vol1(*chart, a); }
    Form v2(int a, int b) const { return vol2(*chart, a, b); }
    Form vn() const { return vol(*chart); }

    // lifted momentum observable delta(W) = W -| theta_canonical
    Form delta(int a) const;
    Form delta_of(const VectorField& xi) const;
};

struct BuildError : Error {
    using Error::Error;
};

PhaseSpace build_phase_space(const TheorySpec& spec, Variant variant);
inline PhaseSpace build_phase_space(const TheorySpec& spec) {
    return build_phase_space(spec, spec.variant);
}

// p -> -H, dp -> -dH.
struct SectionError : Error {
    using Error::Error;
};
Form pull_back_section(const PhaseSpace& ps, const Form& omega, const Expr& H);
inline Form pull_back_section(const PhaseSpace& ps, const Expr& H) {
    return pull_back_section(ps, ps.omega, H);
}

// ---------------------------------------------------------------------------
// Structural equation X -| Omega = dF.

struct SolveOptions {
    int degree_cap = 4;
    bool vertical = false;  // quotient by semi-basic terms, no d/dx components
    // reverse the ansatz column order (determinism check)
    bool reverse_columns = false;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct SolveResult {
    bool hamiltonian = false;
    VectorField X;
    long kernel_dim = 0;
    long unknowns = 0;
    // NotHamiltonian witness
    Form witness;
    std::string witness_text;
};

SolveResult solve_structural(const PhaseSpace& ps, const Form& omega, const Form& F,
                             SolveOptions opt = {});
SolveResult solve_structural(const PhaseSpace& ps, const Form& F, SolveOptions opt = {});

struct NotHamiltonian : Error {
    Form witness;
    NotHamiltonian(const std::string& m, Form w) : Error(m), witness(std::move(w)) {}
};

// Bracket {F,G} = (-1)^{n-|F|} X_F -| dG on (ps, omega), F of degree n-1.
// For a function f in the first slot, {f,G} := (-1)^{h_f h_G} X_G -| df.
class Bracket {
public:
    Bracket(const PhaseSpace& ps, Form omega, SolveOptions opt);
    explicit Bracket(const PhaseSpace& ps);
    VectorField X(const Form& F) const;  // throws NotHamiltonian
    Form operator()(const Form& F, const Form& G) const;
    const Form& omega() const { return omega_; }
    const PhaseSpace& ps() const { return ps_; }

private:
    const PhaseSpace& ps_;
    Form omega_;
    SolveOptions opt_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<std::pair<Mono, std::string>>, VectorField> cache_;
};

struct BiDegree {
    int g;
    int h;
};
BiDegree bidegree(const Form& F, int n);

// Reduce modulo a linear ideal spanned by constraint expressions: each constraint
// is solved for its leading monomial, which is then eliminated.
class ConstraintIdeal {
public:
    explicit ConstraintIdeal(std::vector<Expr> gens);
    Expr reduce(const Expr& e) const;
    bool weakly_zero(const Expr& e) const { return reduce(e).is_zero(); }

private:
    std::vector<std::pair<Mono, Expr>> rules_;  // lead -> replacement (lead coefficient 1)
};

// Expression parser for theory files: sums of products of rationals and generator
// references such as u[1], p[1,0], x[0], eta[2], with ^ for integer powers.
struct ParseError : Error {
    using Error::Error;
};
Expr parse_expr(const Chart& c, const std::string& text);
int parse_gen_ref(const Chart& c, const std::string& text);

}  // namespace artifact
