#pragma once
// Covariant Hamilton and Lagrange-d'Alembert-Hamilton equations by contraction.

#include <string>
#include <vector>

#include "artifact/phase.hpp"

namespace artifact {

struct Equation {
    std::string label;  // e.g. "d/du^1"
    Expr lhs, rhs;
    // the coefficient of d^n x in the pulled-back contraction, c = s (lhs - rhs)
    Expr contraction;
    Q scale = 1;
    // conservation law 0 = D_al J^al: J^al stored here, lhs = 0, rhs = D_al J^al
    std::vector<Expr> current;
};

struct EquationSet {
    std::vector<Equation> eqs;
    const Equation* find(const std::string& label) const;
};

// phi^*: dg -> g_{,be} dx^be for every fiber coordinate g; base differentials kept.
Form prolong(const PhaseSpace& ps, const Form& f);
// coefficient of d^n x in a top-degree base form
Expr volume_coefficient(const PhaseSpace& ps, const Form& f);
// D_be e = d_be e + sum_g g_{,be} d_g e over fiber coordinates; e must be jet-free
Expr total_derivative(const PhaseSpace& ps, const Expr& e, int beta);

// One equation per fiber coordinate: for a configuration coordinate g the left side is
// sum_al (m_g^al)_{,al}, for its momentum m_g^al it is g_{,al}.
EquationSet derive_hamilton_equations(const PhaseSpace& ps, const Expr& H);
EquationSet derive_hamilton_equations(const PhaseSpace& ps, const Form& omega_H, const Expr& H);

// Lagrange-d'Alembert variant: the u and p equations and one Noether law per generator.
EquationSet derive_lda_equations(const PhaseSpace& ps, const Expr& H);

struct MinkowskiMetric {
    int n = 4;
    Q operator()(int mu, int nu) const { return mu != nu ? Q(0) : mu == 0 ? Q(1) : Q(-1); }
};

}  // namespace artifact
