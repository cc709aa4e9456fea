#pragma once
// Hand transcriptions of the reference displays, built term by term from chart
// generators.  Shared by the acceptance binary and the unit tests.

#include <string>
#include <vector>

#include "artifact/brst.hpp"
#include "artifact/fieldeqs.hpp"
#include "artifact/phase.hpp"

namespace oracle {

using namespace artifact;

inline Form mom(const PhaseSpace& ps, const std::vector<int>& row) {
    Form f = ps.zero();
    for (int al = 0; al < ps.n(); ++al) f += ps.X(row[al]) * ps.v(al);
    return f;
}

// Theta for every variant except lagrange-dalembert:
//   p d^nx + p_i^a du^i v_a + B_a^al dlambda^a v_al + P_a^al deta^a v_al + C_a^al drho^a v_al
inline Form theta(const PhaseSpace& ps) {
    const auto& co = ps.co;
    Form t = ps.zero();
    if (co.p >= 0) t += ps.X(co.p) * ps.vn();
    auto pairs = [&](const std::vector<int>& q, const std::vector<std::vector<int>>& m) {
        for (size_t k = 0; k < q.size(); ++k)
            for (int al = 0; al < ps.n(); ++al) t += ps.X(m[k][al]) * ps.D(q[k]) * ps.v(al);
    };
    pairs(co.u, co.pu);
    pairs(co.lam, co.B);
    pairs(co.eta, co.P);
    pairs(co.rho, co.C);
    return t;
}

// Omega = -dp d^nx + du^i dp_i^al v_al + dlambda^a dB_a^al v_al
//         - deta^a dP_a^al v_al - drho^a dC_a^al v_al
inline Form omega(const PhaseSpace& ps) {
    const auto& co = ps.co;
    Form o = ps.zero();
    if (co.p >= 0) o -= ps.D(co.p) * ps.vn();
    auto pairs = [&](const std::vector<int>& q, const std::vector<std::vector<int>>& m, int s) {
        for (size_t k = 0; k < q.size(); ++k)
            for (int al = 0; al < ps.n(); ++al) o += ps.D(q[k]) * ps.D(m[k][al]) * ps.v(al) * Q(s);
    };
    pairs(co.u, co.pu, 1);
    pairs(co.lam, co.B, 1);
    pairs(co.eta, co.P, -1);
    pairs(co.rho, co.C, -1);
    return o;
}

inline Expr xi_comp(const PhaseSpace& ps, int a, int g) {
    const Expr* e = ps.xi.at(a).comp(g);
    return e ? *e : ps.zero();
}

// delta(xi_a) = (p_i^al xi^i + p xi^al) v_al - p_i^al xi^be du^i d^{n-2}x_{al be};
// with H given the affine p is replaced by -H.
inline Form delta(const PhaseSpace& ps, int a, const Expr* H = nullptr) {
    const auto& co = ps.co;
    const int n = ps.n();
    Form r = ps.zero();
    Expr p = H ? -*H : (co.p >= 0 ? ps.X(co.p) : ps.zero());
    for (int al = 0; al < n; ++al) {
        Expr c = p * xi_comp(ps, a, co.x[al]);
        for (size_t i = 0; i < co.u.size(); ++i) c += ps.X(co.pu[i][al]) * xi_comp(ps, a, co.u[i]);
        r += c * ps.v(al);
    }
    for (size_t i = 0; i < co.u.size(); ++i)
        for (int al = 0; al < n; ++al)
            for (int be = 0; be < n; ++be) {
                Expr xb = xi_comp(ps, a, co.x[be]);
                if (xb.is_zero() || al == be) continue;
                r -= ps.X(co.pu[i][al]) * xb * ps.D(co.u[i]) * ps.v2(al, be);
            }
    return r;
}

// Extended Cartan form of the Lagrange-d'Alembert variant:
//   -dp d^nx - dp_i^al du^i v_al + dlambda^a d delta(xi_a)
inline Form omega_ex(const PhaseSpace& ps) {
    const auto& co = ps.co;
    Form o = -(ps.D(co.p) * ps.vn());
    for (size_t i = 0; i < co.u.size(); ++i)
        for (int al = 0; al < ps.n(); ++al) o -= ps.D(co.pu[i][al]) * ps.D(co.u[i]) * ps.v(al);
    for (size_t a = 0; a < co.lam.size(); ++a) o += ps.D(co.lam[a]) * d(delta(ps, (int)a));
    return o;
}

// d/dx^be + sum over fiber generators of g_{,be} d/dg
inline Expr total_d(const PhaseSpace& ps, const Expr& e, int be) {
    Expr r = partial(e, ps.co.x[be]);
    for (auto& [g, js] : ps.co.jet) r += ps.X(js[be]) * partial(e, g);
    return r;
}

// Contraction of d/du^l with the pulled-back extended form, index slips in the last
// two terms read as p_l^al xi^be_{,ga} dlambda dx^ga d^{n-2}x_{al be} contracted out.
inline Form contraction_u(const PhaseSpace& ps, int l, const Expr& H) {
    const auto& co = ps.co;
    const int n = ps.n(), dim = (int)co.lam.size();
    const int ul = co.u[l];
    Expr dHu = partial(H, ul);
    Form r = dHu * ps.vn();
    for (int al = 0; al < n; ++al) r += ps.D(co.pu[l][al]) * ps.v(al);
    for (int a = 0; a < dim; ++a) {
        Form dl = ps.D(co.lam[a]);
        for (size_t i = 0; i < co.u.size(); ++i)
            for (int al = 0; al < n; ++al)
                r -= partial(xi_comp(ps, a, co.u[i]), ul) * ps.X(co.pu[i][al]) * dl * ps.v(al);
        for (int al = 0; al < n; ++al) r += dHu * xi_comp(ps, a, co.x[al]) * dl * ps.v(al);
        for (int al = 0; al < n; ++al)
            for (int be = 0; be < n; ++be) {
                Expr xb = xi_comp(ps, a, co.x[be]);
                if (al != be) r -= xb * dl * ps.D(co.pu[l][al]) * ps.v2(al, be);
                r -= ps.X(co.pu[l][al]) * partial(xb, co.x[be]) * dl * ps.v(al);
                r += ps.X(co.pu[l][al]) * partial(xb, co.x[al]) * dl * ps.v(be);
            }
    }
    return r;
}

// Contraction of d/dp_l^ep with the pulled-back extended form.
inline Form contraction_p(const PhaseSpace& ps, int l, int ep, const Expr& H) {
    const auto& co = ps.co;
    const int n = ps.n(), dim = (int)co.lam.size();
    Expr dHp = partial(H, co.pu[l][ep]);
    Form r = dHp * ps.vn() - ps.D(co.u[l]) * ps.v(ep);
    for (int a = 0; a < dim; ++a) {
        Form dl = ps.D(co.lam[a]);
        r -= xi_comp(ps, a, co.u[l]) * dl * ps.v(ep);
        for (int al = 0; al < n; ++al) r += dHp * xi_comp(ps, a, co.x[al]) * dl * ps.v(al);
        for (int be = 0; be < n; ++be)
            if (be != ep) r += xi_comp(ps, a, co.x[be]) * dl * ps.D(co.u[l]) * ps.v2(ep, be);
    }
    return r;
}

struct Eq {
    Expr lhs, rhs;
};

// First Lagrange-d'Alembert-Hamilton equation for field i (five terms):
//   p^al_{i,al} = -H_{,u^i} + G_a^al_{,u^i} lambda^a_{,al} + lambda^a_{,al} D_be F^{be al}_{ai}
//                 - lambda^a_{,be} D_al F^{be al}_{ai} - lambda^a_{,be} xi^be_a H_{,u^i}
// with G_a^al = p_k^al xi_a^k and F^{be al}_{ai} = p_i^al xi_a^be.
inline Eq lda_u(const PhaseSpace& ps, int i, const Expr& H) {
    const auto& co = ps.co;
    const int n = ps.n(), dim = (int)co.lam.size();
    const int ui = co.u[i];
    Eq e{ps.zero(), ps.zero()};
    for (int al = 0; al < n; ++al) e.lhs += ps.X(co.jet.at(co.pu[i][al])[al]);
    Expr Hu = partial(H, ui);
    e.rhs = -Hu;
    for (int a = 0; a < dim; ++a) {
        auto lj = [&](int al) { return ps.X(co.jet.at(co.lam[a])[al]); };
        for (int al = 0; al < n; ++al) {
            Expr G = ps.zero();
            for (size_t k = 0; k < co.u.size(); ++k) G += ps.X(co.pu[k][al]) * xi_comp(ps, a, co.u[k]);
            e.rhs += partial(G, ui) * lj(al);
        }
        for (int al = 0; al < n; ++al)
            for (int be = 0; be < n; ++be) {
                Expr F = ps.X(co.pu[i][al]) * xi_comp(ps, a, co.x[be]);
                e.rhs += lj(al) * total_d(ps, F, be) - lj(be) * total_d(ps, F, al);
            }
        for (int be = 0; be < n; ++be) e.rhs -= lj(be) * xi_comp(ps, a, co.x[be]) * Hu;
    }
    return e;
}

// Second equation for (i, al), with dF^{be ga}_{ak}/dp_k^ga read as xi^be_a:
//   u^i_{,al} = H_{,p_i^al} - lambda^a_{,be} G_a^be_{,p_i^al} + lambda^a_{,be} xi^be_a H_{,p_i^al}
//               + lambda^a_{,al} xi^be_a u^i_{,be} - lambda^a_{,be} xi^be_a u^i_{,al}
inline Eq lda_p(const PhaseSpace& ps, int i, int al, const Expr& H) {
    const auto& co = ps.co;
    const int n = ps.n(), dim = (int)co.lam.size();
    const int pia = co.pu[i][al];
    auto uj = [&](int be) { return ps.X(co.jet.at(co.u[i])[be]); };
    Eq e{uj(al), ps.zero()};
    Expr Hp = partial(H, pia);
    e.rhs = Hp;
    for (int a = 0; a < dim; ++a) {
        auto lj = [&](int be) { return ps.X(co.jet.at(co.lam[a])[be]); };
        for (int be = 0; be < n; ++be) {
            Expr G = ps.zero();
            for (size_t k = 0; k < co.u.size(); ++k) G += ps.X(co.pu[k][be]) * xi_comp(ps, a, co.u[k]);
            Expr xb = xi_comp(ps, a, co.x[be]);
            e.rhs -= lj(be) * partial(G, pia);
            e.rhs += lj(be) * xb * Hp;
            e.rhs += lj(al) * xb * uj(be);
            e.rhs -= lj(be) * xb * uj(al);
        }
    }
    return e;
}

// Noether law 0 = d phi^* delta_H(xi_a): coefficient of d^nx.
inline Expr noether(const PhaseSpace& ps, int a, const Expr& H) {
    return volume_coefficient(ps, prolong(ps, d(delta(ps, a, &H))));
}

// Generator actions of the reduction theorem:
//   {eta^a, U} = 1/2 C^a_bc eta^b eta^c
//   {P_a, U}   = C^d_ab eta^b P_d + delta_H(xi_a)
//   {F, U}     = {F, delta_H(xi_a)} eta^a
inline Form eta_row(const PhaseSpace& ps, int a) {
    const auto& sc = ps.spec.lie;
    Form r = ps.zero();
    for (int b = 0; b < sc.dim; ++b)
        for (int c = 0; c < sc.dim; ++c)
            r += ps.X(ps.co.eta[b]) * ps.X(ps.co.eta[c]) * (sc.at(a, b, c) / 2);
    return r;
}

inline Form P_row(const PhaseSpace& ps, int a, const Expr* H) {
    const auto& sc = ps.spec.lie;
    Form r = delta(ps, a, H);
    for (int dd = 0; dd < sc.dim; ++dd)
        for (int b = 0; b < sc.dim; ++b) r += ps.X(ps.co.eta[b]) * mom(ps, ps.co.P[dd]) * sc.at(dd, a, b);
    return r;
}

inline Form F_row(const Bracket& br, const Form& F, const Expr* H) {
    const PhaseSpace& ps = br.ps();
    Form r = ps.zero();
    for (int a = 0; a < ps.spec.lie.dim; ++a) r += br(F, delta(ps, a, H)) * ps.X(ps.co.eta[a]);
    return r;
}

// BRST charge 1/2 C^a_bc eta^b eta^c P_a + eta^a delta_H(xi_a) (+ rho^a B_a)
inline Form upsilon(const PhaseSpace& ps, const Expr* H) {
    const auto& sc = ps.spec.lie;
    const auto& co = ps.co;
    Form r = ps.zero();
    for (int a = 0; a < sc.dim; ++a) {
        for (int b = 0; b < sc.dim; ++b)
            for (int c = 0; c < sc.dim; ++c)
                r += ps.X(co.eta[b]) * ps.X(co.eta[c]) * mom(ps, co.P[a]) * (sc.at(a, b, c) / 2);
        r += ps.X(co.eta[a]) * delta(ps, a, H);
    }
    for (size_t a = 0; a < co.rho.size(); ++a) r += ps.X(co.rho[a]) * mom(ps, co.B[a]);
    return r;
}

}  // namespace oracle
