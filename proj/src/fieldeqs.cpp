#include "artifact/fieldeqs.hpp"

namespace artifact {

namespace {

bool is_fiber(Role r) {
    switch (r) {
        case Role::Field:
        case Role::Multiplier:
        case Role::Ghost:
        case Role::Antighost:
        case Role::FieldMom:
        case Role::MultMom:
        case Role::GhostMom:
        case Role::AntighostMom:
            return true;
        default:
            return false;
    }
}

Expr jet_sum(const PhaseSpace& ps, const std::vector<int>& mom) {
    Expr s = ps.zero();
    for (int al = 0; al < (int)mom.size(); ++al) s += ps.X(ps.co.jet.at(mom[al])[al]);
    return s;
}

// Split c = s * lhs + rest with the single-factor lhs monomials sharing one coefficient s.
Equation make_equation(const PhaseSpace& ps, std::string label, const Expr& c, const Expr& lhs) {
    Equation e;
    e.label = std::move(label);
    e.contraction = c;
    e.lhs = lhs;
    const Mono& m0 = lhs.terms().begin()->first;
    auto it = c.terms().find(m0);
    if (it == c.terms().end() || lhs.terms().begin()->second != 1)
        throw Error("equation " + e.label + ": left side does not occur in the contraction");
    e.scale = it->second;
    Expr rest = c - lhs * e.scale;
    for (auto& [m, q] : lhs.terms())
        if (rest.terms().count(m)) throw Error("equation " + e.label + ": unequal left-side weights");
    e.rhs = rest * Q(-1 / e.scale);
    return e;
}

}  // namespace

const Equation* EquationSet::find(const std::string& label) const {
    for (auto& e : eqs)
        if (e.label == label) return &e;
    return nullptr;
}

Form prolong(const PhaseSpace& ps, const Form& f) {
    const Chart& c = ps.c();
    std::map<int, Form> img;
    Form r = ps.zero();
    for (auto& [m, q] : f.terms()) {
        Expr t(&c, q);
        for (auto& fa : m) {
            int id = c.id_of_key(fa.key);
            Expr x;
            if (fcat(fa.key) == 0) {
                x = ps.X(id);
            } else if (c.gen(id).role == Role::Base) {
                x = ps.D(id);
            } else {
                auto it = img.find(id);
                if (it == img.end()) {
                    if (!is_fiber(c.gen(id).role))
                        throw Error("prolong: differential of " + c.gen(id).label);
                    Form s = ps.zero();
                    const auto& js = ps.co.jet.at(id);
                    for (int be = 0; be < ps.n(); ++be) s += ps.X(js[be]) * ps.D(ps.co.x[be]);
                    it = img.emplace(id, s).first;
                }
                x = it->second;
            }
            for (uint32_t k = 0; k < fa.exp; ++k) t = t * x;
        }
        r += t;
    }
    return r;
}

Expr volume_coefficient(const PhaseSpace& ps, const Form& f) {
    Form v = ps.vn();
    const Mono vm = v.terms().begin()->first;
    const Q vq = v.terms().begin()->second;
    Expr r = ps.zero();
    for (auto& [m, q] : f.terms()) {
        Mono dp = mono_diff_part(m);
        if (dp.empty() && q == 0) continue;
        if (dp != vm) throw DegreeError("volume_coefficient: term is not a multiple of d^n x");
        r.add_term(mono_coord_part(m), q / vq);
    }
    return r;
}

Expr total_derivative(const PhaseSpace& ps, const Expr& e, int beta) {
    Expr r = partial(e, ps.co.x.at(beta));
    for (auto& [g, js] : ps.co.jet) {
        Expr pg = partial(e, g);
        if (!pg.is_zero()) r += ps.X(js[beta]) * pg;
    }
    for (auto& [g, js] : ps.co.jet)
        for (int j : js)
            if (!partial(e, j).is_zero()) throw Error("total derivative of a jet symbol");
    return r;
}

EquationSet derive_hamilton_equations(const PhaseSpace& ps, const Expr& H) {
    return derive_hamilton_equations(ps, pull_back_section(ps, H), H);
}

EquationSet derive_hamilton_equations(const PhaseSpace& ps, const Form& om, const Expr&) {
    const auto& co = ps.co;
    const int n = ps.n();
    if (ps.variant == Variant::LagrangeDAlembert)
        throw Error("use derive_lda_equations for the Lagrange-d'Alembert variant");
    EquationSet out;
    auto contraction = [&](int g) { return volume_coefficient(ps, prolong(ps, hook_gen(g, om))); };
    auto pair = [&](int q, const std::vector<int>& mom) {
        const std::string& lab = ps.c().gen(q).label;
        out.eqs.push_back(make_equation(ps, "d/d" + lab, contraction(q), jet_sum(ps, mom)));
        for (int al = 0; al < n; ++al)
            out.eqs.push_back(make_equation(ps, "d/d" + ps.c().gen(mom[al]).label,
                                            contraction(mom[al]), ps.X(co.jet.at(q)[al])));
    };
    for (size_t k = 0; k < co.u.size(); ++k) pair(co.u[k], co.pu[k]);
    for (size_t a = 0; a < co.B.size(); ++a) pair(co.lam[a], co.B[a]);
    for (size_t a = 0; a < co.P.size(); ++a) pair(co.eta[a], co.P[a]);
    for (size_t a = 0; a < co.C.size(); ++a) pair(co.rho[a], co.C[a]);
    return out;
}

EquationSet derive_lda_equations(const PhaseSpace& ps, const Expr& H) {
    const auto& co = ps.co;
    const int n = ps.n();
    if (ps.variant != Variant::LagrangeDAlembert)
        throw Error("derive_lda_equations needs the Lagrange-d'Alembert variant");
    if (ps.xi.empty()) throw Error("no generator currents registered");
    Form om = pull_back_section(ps, H);
    EquationSet out;
    auto contraction = [&](int g) { return volume_coefficient(ps, prolong(ps, hook_gen(g, om))); };
    for (size_t k = 0; k < co.u.size(); ++k) {
        const std::string& lab = ps.c().gen(co.u[k]).label;
        out.eqs.push_back(make_equation(ps, "d/d" + lab, contraction(co.u[k]), jet_sum(ps, co.pu[k])));
        for (int al = 0; al < n; ++al)
            out.eqs.push_back(make_equation(ps, "d/d" + ps.c().gen(co.pu[k][al]).label,
                                            contraction(co.pu[k][al]), ps.X(co.jet.at(co.u[k])[al])));
    }
    // d/dlambda^a -| Omega_H = d delta_H(xi_a), so its pull-back is d phi^* delta_H(xi_a)
    for (size_t a = 0; a < co.lam.size(); ++a) {
        Equation e;
        e.label = "d/d" + ps.c().gen(co.lam[a]).label;
        e.contraction = contraction(co.lam[a]);
        e.lhs = ps.zero();
        Form dH = substitute(ps.delta((int)a), {{co.p, -H}});
        if (e.contraction != volume_coefficient(ps, prolong(ps, d(dH))))
            throw Error("internal: multiplier contraction is not d delta_H");
        e.rhs = e.contraction;
        Form J = prolong(ps, dH);
        for (int al = 0; al < n; ++al) {
            // coefficient of d^{n-1}x_al
            Form v = ps.v(al);
            const Mono vm = v.terms().begin()->first;
            const Q vq = v.terms().begin()->second;
            Expr j = ps.zero();
            for (auto& [m, q] : J.terms())
                if (mono_diff_part(m) == vm) j.add_term(mono_coord_part(m), q / vq);
            e.current.push_back(j);
        }
        out.eqs.push_back(std::move(e));
    }
    return out;
}

}  // namespace artifact
