#include "artifact/ym.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "artifact/brst.hpp"
#include "artifact/fieldeqs.hpp"

namespace artifact {

namespace {

constexpr int kN = 4;

Q eta_(int mu) { return mu == 0 ? Q(1) : Q(-1); }

std::string idx(std::initializer_list<int> v) {
    std::string s;
    for (int i : v) s += std::to_string(i);
    return s;
}

// a == s * b for one nonzero rational s
bool proportional(const Expr& a, const Expr& b, Q* s = nullptr) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [m, q] = *b.terms().begin();
    auto it = a.terms().find(m);
    if (it == a.terms().end()) return false;
    Q r = it->second / q;
    if (s) *s = r;
    return a == b * r;
}

class Rows {
public:
    explicit Rows(YmCheck& c) : c_(c) { c_.pass = true; }
    void add(const std::string& key, const std::string& computed, bool ok, const std::string& expected) {
        c_.lines.push_back(key + ": " + computed);
        if (!ok) {
            if (c_.pass) c_.mismatch = key + ": computed " + computed + " ; displayed " + expected;
            c_.pass = false;
        }
    }
    void add(const std::string& key, const Expr& computed, const Expr& expected) {
        add(key, to_string(computed), computed == expected, to_string(expected));
    }
    void add(const std::string& key, const VectorField& computed, const VectorField& expected) {
        add(key, to_string(computed), computed == expected, to_string(expected));
    }

private:
    YmCheck& c_;
};

struct Lie {
    const StructureConstants& fc;
    int dim;
    // f_abc = f^c_ab, 1-based
    Q f(int a, int b, int c) const { return fc.at(c - 1, a - 1, b - 1); }
};

void check_total_antisymmetry(const Lie& L) {
    for (int a = 1; a <= L.dim; ++a)
        for (int b = 1; b <= L.dim; ++b)
            for (int c = 1; c <= L.dim; ++c)
                if (L.f(a, b, c) != -L.f(b, a, c) || L.f(a, b, c) != -L.f(a, c, b))
                    throw Error("Yang-Mills structure constants must be totally antisymmetric");
}

// ---------------------------------------------------------------------------
// Coordinates on the 16-component charts built from yang_mills_spec.

struct Vert {
    const PhaseSpace& ps;
    int dim;
    int A(int a, int mu) const { return ps.c().require("A", {a, mu}); }
    int F(int a, int mu, int nu) const { return ps.c().require("F", {a, mu, nu}); }
    Expr xA(int a, int mu) const { return ps.X(A(a, mu)); }
    Expr xF(int a, int mu, int nu) const { return ps.X(F(a, mu, nu)); }
    // lowered F_{a mu nu}
    Expr lF(int a, int mu, int nu) const { return xF(a, mu, nu) * (eta_(mu) * eta_(nu)); }
    Expr jet(int g, int be) const { return ps.X(ps.co.jet.at(g).at(be)); }
};

// ---------------------------------------------------------------------------
// Constrained chart: F_a^{mu nu} only for mu < nu, F^{nu mu} = -F^{mu nu}.

struct Cov {
    PhaseSpace ps;
    int dim = 0;
    std::map<std::array<int, 2>, int> A;
    std::map<std::array<int, 3>, int> F;       // mu < nu
    std::map<std::array<int, 4>, int> A2;      // A^a_{mu, nu rho}, nu <= rho
    Expr xA(int a, int mu) const { return ps.X(A.at({a, mu})); }
    Expr xF(int a, int mu, int nu) const {
        if (mu == nu) return ps.zero();
        return mu < nu ? ps.X(F.at({a, mu, nu})) : -ps.X(F.at({a, nu, mu}));
    }
    Expr lF(int a, int mu, int nu) const { return xF(a, mu, nu) * (eta_(mu) * eta_(nu)); }
    Form dF(int a, int mu, int nu) const {
        if (mu == nu) return ps.zero();
        return mu < nu ? ps.D(F.at({a, mu, nu})) : -ps.D(F.at({a, nu, mu}));
    }
    Expr jA(int a, int mu, int be) const { return ps.X(ps.co.jet.at(A.at({a, mu})).at(be)); }
    Expr jF(int a, int mu, int nu, int be) const {
        if (mu == nu) return ps.zero();
        return mu < nu ? ps.X(ps.co.jet.at(F.at({a, mu, nu})).at(be))
                       : -ps.X(ps.co.jet.at(F.at({a, nu, mu})).at(be));
    }
    Expr jA2(int a, int mu, int nu, int rho) const {
        return ps.X(A2.at({a, mu, std::min(nu, rho), std::max(nu, rho)}));
    }
    // d/dF^{mu nu} with the half normalisation used for antisymmetric pairs
    Form dF_hook(int a, int mu, int nu, const Form& w) const {
        if (mu == nu) return ps.zero();
        Form h = hook_gen(F.at({a, std::min(mu, nu), std::max(mu, nu)}), w) * Q(1, 2);
        return mu < nu ? h : -h;
    }
};

Cov build_constrained(int dim) {
    Cov cv;
    cv.dim = dim;
    PhaseSpace& ps = cv.ps;
    ps.variant = Variant::Plain;
    ps.chart = std::make_shared<Chart>(kN);
    Chart& c = *ps.chart;
    Coords& co = ps.co;
    for (int a = 0; a < kN; ++a) co.x.push_back(c.add("x", {a}, Role::Base, "x^" + std::to_string(a)));
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu) {
            int g = c.add("A", {a, mu}, Role::Field, "A^" + std::to_string(a) + "_" + std::to_string(mu));
            cv.A[{a, mu}] = g;
            co.u.push_back(g);
        }
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = mu + 1; nu < kN; ++nu)
                cv.F[{a, mu, nu}] =
                    c.add("F", {a, mu, nu}, Role::FieldMom, "F_" + std::to_string(a) + "^" + idx({mu, nu}));
    co.p = c.add("p", {}, Role::Affine, "p");
    std::vector<int> fibers = co.u;
    for (auto& [k, g] : cv.F) fibers.push_back(g);
    for (int g : fibers) {
        Gen G = c.gen(g);
        std::vector<int> row;
        for (int be = 0; be < kN; ++be) {
            auto j = G.indices;
            j.push_back(be);
            row.push_back(c.add(G.name + ",", j, Role::Jet, G.label + "_{," + std::to_string(be) + "}"));
        }
        co.jet[g] = row;
    }
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = 0; nu < kN; ++nu)
                for (int rho = nu; rho < kN; ++rho)
                    cv.A2[{a, mu, nu, rho}] =
                        c.add("A,,", {a, mu, nu, rho}, Role::Jet,
                              "A^" + std::to_string(a) + "_" + std::to_string(mu) + "_{," + idx({nu, rho}) + "}");
    c.freeze();
    Form th = ps.X(co.p) * ps.vn();
    for (auto& [k, g] : cv.F) {
        auto [a, mu, nu] = k;
        th += ps.X(g) * (ps.D(cv.A.at({a, mu})) * ps.v(nu) - ps.D(cv.A.at({a, nu})) * ps.v(mu));
    }
    ps.theta = ps.theta_canonical = th;
    ps.omega = -d(th);
    return cv;
}

// ---------------------------------------------------------------------------

void legendre_checks(const Lie& L, const PhaseSpace& ps, YmReport& rep) {
    Vert V{ps, L.dim};
    const int dim = L.dim;
    auto vel = [&](int a, int mu, int nu) { return V.jet(V.A(a, mu), nu); };
    // lowered field strength in jets: A_{nu,mu} - A_{mu,nu} + f^a_bc A^b_mu A^c_nu
    auto Fj = [&](int a, int mu, int nu) {
        Expr r = vel(a, nu, mu) - vel(a, mu, nu);
        for (int b = 1; b <= dim; ++b)
            for (int c = 1; c <= dim; ++c)
                if (L.f(b, c, a) != 0) r += V.xA(b, mu) * V.xA(c, nu) * L.f(b, c, a);
        return r;
    };
    Expr FF = ps.zero();
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = 0; nu < kN; ++nu) FF += Fj(a, mu, nu) * Fj(a, mu, nu) * (eta_(mu) * eta_(nu));
    Expr Lag = FF * Q(-1, 4);

    YmCheck mom{"legendre.momenta", "multimomenta dL/dA^a_{mu,nu} = F_a^{mu nu}"};
    YmCheck en{"legendre.energy", "p = L - wp (A_{mu,nu} + Gamma_{mu nu}) = 1/4 F.F, so H = -1/4 F.F"};
    Rows rm(mom), re(en);
    Expr contr = ps.zero();
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = 0; nu < kN; ++nu) {
                int v = ps.co.jet.at(V.A(a, mu)).at(nu);
                Expr wp = partial(Lag, v);
                rm.add("wp_" + std::to_string(a) + "^" + idx({mu, nu}), wp,
                       Fj(a, mu, nu) * (eta_(mu) * eta_(nu)));
                Expr gamma = ps.zero();
                for (int b = 1; b <= dim; ++b)
                    for (int c = 1; c <= dim; ++c)
                        if (L.f(b, c, a) != 0) gamma += V.xA(b, mu) * V.xA(c, nu) * (L.f(b, c, a) * Q(-1, 2));
                contr += wp * (ps.X(v) + gamma);
            }
    re.add("p", Lag - contr, FF * Q(1, 4));
    rep.checks.push_back(mom);
    rep.checks.push_back(en);
}

void constraint_checks(const Lie& L, YmReport& rep) {
    const int dim = L.dim;
    PhaseSpace ps = build_phase_space(yang_mills_spec(L.fc, Variant::Vertical, false));
    Vert V{ps, dim};
    Bracket br(ps);
    const Form& om = ps.omega;

    // F_a^{mu nu}(A): the part of the field strength that is a function on Z
    auto FA = [&](int a, int mu, int nu) {
        Expr r = ps.zero();
        for (int b = 1; b <= dim; ++b)
            for (int c = 1; c <= dim; ++c)
                if (L.f(a, b, c) != 0) r += V.xA(b, mu) * V.xA(c, nu) * (L.f(a, b, c) * eta_(mu) * eta_(nu));
        return r;
    };
    auto T = [&](int a, int mu) {
        Form r = ps.zero();
        for (int nu = 0; nu < kN; ++nu) r += (V.xF(a, mu, nu) - FA(a, mu, nu)) * ps.v(nu);
        return r;
    };

    YmCheck xt{"T.vector_field", "X(T)_a^mu = d/dA^a_mu + 2 eta^{mu la} eta^{nu pi} f_abc A^c_pi d/dwp_b^{la nu}"};
    xt.note = "the display sums a free index; read as d/dwp_b with b summed";
    Rows rx(xt);
    std::map<std::pair<int, int>, VectorField> XT;
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu) {
            VectorField X = br.X(T(a, mu));
            XT[{a, mu}] = X;
            VectorField e = VectorField::basis(ps.c(), V.A(a, mu));
            for (int b = 1; b <= dim; ++b)
                for (int c = 1; c <= dim; ++c)
                    for (int nu = 0; nu < kN; ++nu) {
                        if (L.f(a, b, c) == 0) continue;
                        // eta^{mu la} eta^{nu pi} is diagonal: la = mu, pi = nu
                        e.add(V.F(b, mu, nu), V.xA(c, nu) * (2 * eta_(mu) * eta_(nu) * L.f(a, b, c)));
                    }
            rx.add("X(T)_" + std::to_string(a) + "^" + std::to_string(mu), X, e);
        }
    rep.checks.push_back(xt);

    YmCheck ab{"T.abelian", "X(T)_a^mu -| X(T)_b^ka -| Omega^VT = 0"};
    Rows ra(ab);
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu)
            for (int b = 1; b <= dim; ++b)
                for (int ka = 0; ka < kN; ++ka)
                    ra.add("(" + std::to_string(a) + idx({mu}) + "," + std::to_string(b) + idx({ka}) + ")",
                           hook(XT[{a, mu}], hook(XT[{b, ka}], om)), ps.zero());
    rep.checks.push_back(ab);

    // consistency: X(T)_a^mu(H) with H = -1/4 wp_{mu nu} wp^{mu nu}, modulo wp^{mu nu} + wp^{nu mu}
    YmCheck cs{"T.consistency", "X(T)_a^mu -| X(H) -| Omega^VT ~ 0 is S_a ~ 0"};
    Rows rc(cs);
    Expr H = ps.zero();
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = 0; nu < kN; ++nu) H += V.xF(a, mu, nu) * V.lF(a, mu, nu) * Q(-1, 4);
    std::vector<Expr> sym;
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = mu; nu < kN; ++nu) sym.push_back(V.xF(a, mu, nu) + V.xF(a, nu, mu));
    ConstraintIdeal ideal(sym);
    std::optional<Q> scale;
    for (int a = 1; a <= dim; ++a)
        for (int mu = 0; mu < kN; ++mu) {
            Expr got = ideal.reduce(XT[{a, mu}].apply(H));
            Expr S = ps.zero();
            for (int b = 1; b <= dim; ++b)
                for (int c = 1; c <= dim; ++c)
                    for (int r = 0; r < kN; ++r)
                        if (L.f(a, b, c) != 0) S += V.xA(b, r) * V.xF(c, r, mu) * L.f(a, b, c);
            S = ideal.reduce(S);
            Q s;
            bool ok = proportional(got, S, &s) && (!scale || *scale == s);
            if (ok && !S.is_zero()) scale = s;
            rc.add("a=" + std::to_string(a) + ",mu=" + std::to_string(mu), to_string(got), ok,
                   "multiple of " + to_string(S));
        }
    if (scale) cs.note = "X(T)_a^mu(H) = " + scale->get_str() + " S_a^mu modulo the symmetric part of wp";
    rep.checks.push_back(cs);

    // secondary constraints and their algebra
    auto S = [&](int a) {
        Form r = ps.zero();
        for (int b = 1; b <= dim; ++b)
            for (int c = 1; c <= dim; ++c)
                for (int rr = 0; rr < kN; ++rr)
                    for (int nu = 0; nu < kN; ++nu)
                        if (L.f(a, b, c) != 0) r += V.xA(b, rr) * V.xF(c, rr, nu) * ps.v(nu) * L.f(a, b, c);
        return r;
    };
    YmCheck sg{"S.generator", "S_a = delta(xi_a) for the adjoint action"};
    Rows rs(sg);
    for (int a = 1; a <= dim; ++a) rs.add("S_" + std::to_string(a), ps.delta(a - 1), S(a));
    rep.checks.push_back(sg);

    YmCheck sx{"S.vector_field", "X(S)_a = f_aef A^e_mu d/dA^f_mu - f_aef F_f^{mu nu} d/dF_e^{mu nu}"};
    Rows rsx(sx);
    std::vector<VectorField> XS;
    for (int a = 1; a <= dim; ++a) {
        VectorField X = br.X(S(a));
        XS.push_back(X);
        VectorField e(&ps.c());
        for (int ee = 1; ee <= dim; ++ee)
            for (int ff = 1; ff <= dim; ++ff) {
                Q k = L.f(a, ee, ff);
                if (k == 0) continue;
                for (int mu = 0; mu < kN; ++mu) {
                    e.add(V.A(ff, mu), V.xA(ee, mu) * k);
                    for (int nu = 0; nu < kN; ++nu) e.add(V.F(ee, mu, nu), V.xF(ff, mu, nu) * (-k));
                }
            }
        rsx.add("X(S)_" + std::to_string(a), X, e);
    }
    rep.checks.push_back(sx);

    YmCheck sa{"S.algebra", "X(S)_a -| X(S)_b -| Omega^VT = f^c_ab S_c"};
    Rows rsa(sa);
    bool bracket_ok = true;
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b) {
            Form e = ps.zero();
            for (int c = 1; c <= dim; ++c)
                if (L.f(a, b, c) != 0) e += S(c) * L.f(a, b, c);
            rsa.add("(" + std::to_string(a) + "," + std::to_string(b) + ")",
                    hook(XS[a - 1], hook(XS[b - 1], om)), e);
            if (br(S(a), S(b)) != e) bracket_ok = false;
        }
    if (bracket_ok) sa.note = "the bracket {S_a, S_b} = (-1)^{n-3} X(S)_a -| d S_b equals f^c_ab S_c";
    rep.checks.push_back(sa);
}

void covariant_checks(const Lie& L, YmReport& rep) {
    const int dim = L.dim;
    Cov cv = build_constrained(dim);
    const PhaseSpace& ps = cv.ps;

    YmCheck oc{"omega.constrained", "Omega^T = -dp d4x + dA_mu dF^{mu nu} d3x_nu"};
    Rows ro(oc);
    {
        Form e = -(ps.D(ps.co.p) * ps.vn());
        for (int a = 1; a <= dim; ++a)
            for (int mu = 0; mu < kN; ++mu)
                for (int nu = 0; nu < kN; ++nu) {
                    if (mu == nu) continue;
                    int g = cv.F.at({a, std::min(mu, nu), std::max(mu, nu)});
                    e += ps.D(cv.A.at({a, mu})) * ps.D(g) * ps.v(nu) * Q(mu < nu ? 1 : -1);
                }
        ro.add("Omega^T", ps.omega, e);
    }
    rep.checks.push_back(oc);

    auto fAA = [&](int m, int pi, int ka) {  // f^m_ef A^e_pi A^f_ka
        Expr r = ps.zero();
        for (int e = 1; e <= dim; ++e)
            for (int f = 1; f <= dim; ++f)
                if (L.f(e, f, m) != 0) r += cv.xA(e, pi) * cv.xA(f, ka) * L.f(e, f, m);
        return r;
    };
    auto upper = [](int pi, int ka) -> Q { return eta_(pi) * eta_(ka); };
    Expr FF = ps.zero(), FfAA = ps.zero();
    for (int d = 1; d <= dim; ++d)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = 0; nu < kN; ++nu) {
                FF += cv.lF(d, mu, nu) * cv.xF(d, mu, nu);
                FfAA += cv.xF(d, mu, nu) * fAA(d, mu, nu);
            }
    Expr Hym = FF * Q(-1, 4);
    Expr Hdisp = Hym + FfAA * Q(1, 2);

    // displayed Omega_H
    Form disp = ps.zero();
    for (int d = 1; d <= dim; ++d)
        for (int mu = 0; mu < kN; ++mu)
            for (int nu = 0; nu < kN; ++nu) {
                if (mu == nu) continue;
                Form dF = cv.dF(d, mu, nu);
                disp += fAA(d, mu, nu) * dF * ps.vn() * Q(1, 2);
                disp -= cv.lF(d, mu, nu) * dF * ps.vn() * Q(1, 2);
                for (int e = 1; e <= dim; ++e)
                    for (int f = 1; f <= dim; ++f)
                        if (L.f(e, f, d) != 0)
                            disp += cv.xF(d, mu, nu) * cv.xA(e, mu) * ps.D(cv.A.at({f, nu})) * ps.vn() *
                                    L.f(e, f, d);
                disp += (ps.D(cv.A.at({d, mu})) * dF * ps.v(nu) - ps.D(cv.A.at({d, nu})) * dF * ps.v(mu)) *
                        Q(1, 2);
            }
    YmCheck oh{"omega.H", "Omega_H = pull-back of Omega^T by p = -H^YM"};
    Rows rh(oh);
    Form omH = pull_back_section(ps, ps.omega, Hym);
    rh.add("Omega_H", omH, disp);
    Form omD = pull_back_section(ps, ps.omega, Hdisp);
    if (omD == disp)
        oh.note = "the display is the pull-back by H = -1/4 F.F + 1/2 F^{mu nu} f A_mu A_nu";
    rep.checks.push_back(oh);
    YmCheck od{"omega.H-displayed", "Omega_H display = pull-back by -1/4 F.F + 1/2 F.fAA"};
    Rows rd(od);
    rd.add("Omega_H", omD, disp);
    rep.checks.push_back(od);

    // contractions with the displayed Omega_H
    YmCheck ca{"eom.contraction-A", "d/dA^m_pi -| Omega_H"};
    ca.note = "unbound f index read as m";
    YmCheck cf{"eom.contraction-F", "d/dF_m^{pi ka} -| Omega_H (half-normalised)"};
    Rows rca(ca), rcf(cf);
    for (int m = 1; m <= dim; ++m)
        for (int pi = 0; pi < kN; ++pi) {
            Form e = ps.zero();
            for (int nu = 0; nu < kN; ++nu) {
                if (nu != pi) e += cv.dF(m, pi, nu) * ps.v(nu);
                for (int dd = 1; dd <= dim; ++dd)
                    for (int ee = 1; ee <= dim; ++ee)
                        if (L.f(ee, m, dd) != 0)
                            e += cv.xF(dd, nu, pi) * cv.xA(ee, nu) * ps.vn() * L.f(ee, m, dd);
            }
            rca.add("m=" + std::to_string(m) + ",pi=" + std::to_string(pi), hook_gen(cv.A.at({m, pi}), omD), e);
            for (int ka = 0; ka < kN; ++ka) {
                if (ka == pi) continue;
                Form e2 = (ps.D(cv.A.at({m, pi})) * ps.v(ka) - ps.D(cv.A.at({m, ka})) * ps.v(pi)) * Q(1, 2) +
                          fAA(m, pi, ka) * ps.vn() * Q(1, 2);
                rcf.add("m=" + std::to_string(m) + ",pi=" + std::to_string(pi) + ",ka=" + std::to_string(ka),
                        cv.dF_hook(m, pi, ka, omD), e2);
            }
        }
    rep.checks.push_back(ca);
    rep.checks.push_back(cf);

    // field equations from the displayed Omega_H
    auto eq = [&](int g) { return volume_coefficient(ps, prolong(ps, hook_gen(g, omD))); };
    YmCheck e1{"eom.displayed-1", "dF_m^{pi ka}/dx^ka + F_d^{pi mu} f^d_em A^e_mu = 0"};
    YmCheck e2{"eom.displayed-2", "F^m_{pi ka} = A^m_{[pi,ka]} + f^m_ef A^e_pi A^f_ka"};
    YmCheck y1{"eom.yang-mills-1", "D_ka F_m^{pi ka} = d_ka F_m^{pi ka} + f_med A^e_ka F_d^{pi ka} = 0"};
    YmCheck y2{"eom.yang-mills-2", "F_{pi ka} = d_pi A_ka - d_ka A_pi + f A_pi A_ka"};
    YmCheck rt{"eom.round-trip", "second relation substituted into the first gives the component YM equation"};
    e1.note = "unbound f index read as m; weight-1 bracket A_[pi,ka] = A_pi,ka - A_ka,pi";
    Rows r1(e1), r2(e2), q1(y1), q2(y2), rr(rt);

    // F as a function of A and its first jets, and its total derivative
    auto Fsub = [&](int m, int pi, int ka) {  // upper
        return (cv.jA(m, ka, pi) - cv.jA(m, pi, ka) + fAA(m, pi, ka)) * upper(pi, ka);
    };
    std::map<int, Expr> sub;
    for (auto& [k, g] : cv.F) {
        auto [m, pi, ka] = k;
        sub[g] = Fsub(m, pi, ka);
    }
    auto Dtot = [&](const Expr& e, int be) {
        Expr r = ps.zero();
        for (auto& [k, g] : cv.A) {
            auto [a, mu] = k;
            Expr pg = partial(e, g);
            if (!pg.is_zero()) r += pg * cv.jA(a, mu, be);
            for (int nu = 0; nu < kN; ++nu) {
                Expr pj = partial(e, ps.co.jet.at(g)[nu]);
                if (!pj.is_zero()) r += pj * cv.jA2(a, mu, nu, be);
            }
        }
        return r;
    };
    for (int m = 1; m <= dim; ++m)
        for (int pi = 0; pi < kN; ++pi) {
            std::string key = "m=" + std::to_string(m) + ",pi=" + std::to_string(pi);
            Expr c = eq(cv.A.at({m, pi}));
            Expr disp1 = ps.zero(), ym1 = ps.zero();
            for (int ka = 0; ka < kN; ++ka) {
                disp1 += cv.jF(m, pi, ka, ka);
                ym1 += cv.jF(m, pi, ka, ka);
                for (int dd = 1; dd <= dim; ++dd)
                    for (int ee = 1; ee <= dim; ++ee) {
                        if (L.f(ee, m, dd) != 0) disp1 += cv.xF(dd, pi, ka) * cv.xA(ee, ka) * L.f(ee, m, dd);
                        if (L.f(m, ee, dd) != 0) ym1 += cv.xA(ee, ka) * cv.xF(dd, pi, ka) * L.f(m, ee, dd);
                    }
            }
            r1.add(key, to_string(c), proportional(c, disp1), to_string(disp1));
            q1.add(key, to_string(c), proportional(c, ym1), to_string(ym1));

            // round trip: jets of F replaced by total derivatives of F(A, dA)
            std::map<int, Expr> s2 = sub;
            for (auto& [k, g] : cv.F) {
                auto [mm, a0, a1] = k;
                for (int be = 0; be < kN; ++be) s2[ps.co.jet.at(g)[be]] = Dtot(Fsub(mm, a0, a1), be);
            }
            Expr got = substitute(c, s2);
            // hand expansion: eta^{pi pi} eta^{ka ka} [A_ka,pi ka - A_pi,ka ka + f(A_pi,ka A_ka + A_pi A_ka,ka)]
            //   + f_med A^e_ka F^d_{pi ka}(A) raised
            Expr want = ps.zero();
            for (int ka = 0; ka < kN; ++ka) {
                Q up = upper(pi, ka);
                Expr t = cv.jA2(m, ka, pi, ka) - cv.jA2(m, pi, ka, ka);
                for (int e = 1; e <= dim; ++e)
                    for (int f = 1; f <= dim; ++f)
                        if (L.f(e, f, m) != 0)
                            t += (cv.jA(e, pi, ka) * cv.xA(f, ka) + cv.xA(e, pi) * cv.jA(f, ka, ka)) * L.f(e, f, m);
                for (int e = 1; e <= dim; ++e)
                    for (int dd = 1; dd <= dim; ++dd) {
                        if (L.f(m, e, dd) == 0) continue;
                        Expr Fd = cv.jA(dd, ka, pi) - cv.jA(dd, pi, ka);
                        for (int g = 1; g <= dim; ++g)
                            for (int h = 1; h <= dim; ++h)
                                if (L.f(g, h, dd) != 0) Fd += cv.xA(g, pi) * cv.xA(h, ka) * L.f(g, h, dd);
                        t += cv.xA(e, ka) * Fd * L.f(m, e, dd);
                    }
                want += t * up;
            }
            rr.add(key, to_string(got), proportional(got, want), to_string(want));
        }
    for (auto& [k, g] : cv.F) {
        auto [m, pi, ka] = k;
        std::string key = "m=" + std::to_string(m) + ",pi=" + std::to_string(pi) + ",ka=" + std::to_string(ka);
        Expr c = eq(g);
        Expr low = cv.lF(m, pi, ka);
        Expr disp2 = low - (cv.jA(m, pi, ka) - cv.jA(m, ka, pi)) - fAA(m, pi, ka);
        Expr ym2 = low - (cv.jA(m, ka, pi) - cv.jA(m, pi, ka)) - fAA(m, pi, ka);
        r2.add(key, to_string(c), proportional(c, disp2), to_string(disp2));
        q2.add(key, to_string(c), proportional(c, ym2), to_string(ym2));
    }
    for (auto* c : {&e1, &e2, &y1, &y2, &rt}) rep.checks.push_back(*c);
}

void table_checks(const Lie& L, YmReport& rep) {
    const int dim = L.dim;
    PhaseSpace ps = build_phase_space(yang_mills_spec(L.fc, Variant::Vertical, true));
    Vert V{ps, dim};
    const Coords& co = ps.co;
    Bracket br(ps);
    const Form& om = ps.omega;
    const Chart& c = ps.c();
    auto s = [](int i) { return std::to_string(i); };

    YmCheck ov{"omega.vertical-extended", "Omega^VYM_LT"};
    Rows rov(ov);
    {
        Form e = ps.zero();
        for (int nu = 0; nu < kN; ++nu)
            for (int a = 1; a <= dim; ++a) {
                for (int mu = 0; mu < kN; ++mu) e += ps.D(V.A(a, mu)) * ps.D(V.F(a, mu, nu)) * ps.v(nu);
                e += ps.D(co.lam[a - 1]) * ps.D(co.B[a - 1][nu]) * ps.v(nu);
                e -= ps.D(co.eta[a - 1]) * ps.D(co.P[a - 1][nu]) * ps.v(nu);
                e -= ps.D(co.rho[a - 1]) * ps.D(co.C[a - 1][nu]) * ps.v(nu);
            }
        rov.add("Omega", om, e);
    }
    rep.checks.push_back(ov);

    // canonical coordinate observables
    auto obsA = [&](int a, int mu, int nu) { return V.xA(a, mu) * ps.v(nu); };
    auto mom = [&](const std::vector<int>& row) {
        Form r = ps.zero();
        for (int nu = 0; nu < kN; ++nu) r += ps.X(row[nu]) * ps.v(nu);
        return r;
    };
    auto obsF = [&](int b, int ka) {
        Form r = ps.zero();
        for (int nu = 0; nu < kN; ++nu) r += V.xF(b, ka, nu) * ps.v(nu);
        return r;
    };
    auto obs1 = [&](const std::vector<int>& ids, int a, int nu) { return ps.X(ids[a - 1]) * ps.v(nu); };
    auto delta = [](int a, int b) { return a == b ? Q(1) : Q(0); };

    YmCheck bt{"bracket.A-F", "{A^a_{mu nu}, F_b^ka} = 1/2 delta^a_b delta^ka_[mu d3x_nu]"};
    {
        Rows r(bt);
        bool proj = true;
        for (int a = 1; a <= dim; ++a)
            for (int b = 1; b <= dim; ++b)
                for (int mu = 0; mu < kN; ++mu)
                    for (int nu = 0; nu < kN; ++nu)
                        for (int ka = 0; ka < kN; ++ka) {
                            Form got = br(obsA(a, mu, nu), obsF(b, ka));
                            Form e = (ps.v(nu) * delta(ka, mu) - ps.v(mu) * delta(ka, nu)) * (delta(a, b) * Q(1, 2));
                            // antisymmetrised in (mu, nu)
                            Form anti = (got - br(obsA(a, nu, mu), obsF(b, ka))) * Q(1, 2);
                            if (anti != e) proj = false;
                            r.add(s(a) + s(b) + "," + idx({mu, nu, ka}), got, e);
                        }
        if (proj) bt.note = "the display equals the part antisymmetric in (mu, nu)";
    }
    rep.checks.push_back(bt);

    struct Pair {
        const char* id;
        const char* title;
        const std::vector<int>* coord;
        const std::vector<std::vector<int>>* mom;
        Q sign;
    };
    std::vector<Pair> pairs = {{"bracket.eta-P", "{eta^a_nu, P_b} = -delta^a_b d3x_nu", &co.eta, &co.P, -1},
                               {"bracket.lambda-B", "{lambda^a_nu, B_b} = delta^a_b d3x_nu", &co.lam, &co.B, 1},
                               {"bracket.rho-C", "{rho^a_nu, C_b} = -delta^a_b d3x_nu", &co.rho, &co.C, -1}};
    for (auto& p : pairs) {
        YmCheck ck{p.id, p.title};
        Rows r(ck);
        for (int a = 1; a <= dim; ++a)
            for (int b = 1; b <= dim; ++b)
                for (int nu = 0; nu < kN; ++nu)
                    r.add(s(a) + s(b) + "," + s(nu), br(obs1(*p.coord, a, nu), mom((*p.mom)[b - 1])),
                          ps.v(nu) * (p.sign * delta(a, b)));
        rep.checks.push_back(ck);
    }

    // Hamiltonian vector fields
    YmCheck xt{"hvf.table", "X(A) = -d/dF, X(F) = d/dA, X(eta) = -d/dP, X(P) = -d/deta, X(lambda) = -d/dB, "
                            "X(B) = d/dlambda, X(rho) = -d/dC, X(C) = -d/drho"};
    xt.note = "index typos read as X(eta)^c_nu = -d/dP_c^nu and X(rho)^a_nu = -d/dC_a^nu";
    {
        Rows r(xt);
        auto row = [&](const std::string& key, const Form& F, int g, int sign) {
            r.add(key, br.X(F), VectorField::basis(c, g, sign));
        };
        for (int a = 1; a <= dim; ++a)
            for (int mu = 0; mu < kN; ++mu)
                for (int nu = 0; nu < kN; ++nu) row("X(A)^" + s(a) + "_" + idx({mu, nu}), obsA(a, mu, nu), V.F(a, mu, nu), -1);
        for (int b = 1; b <= dim; ++b)
            for (int mu = 0; mu < kN; ++mu) row("X(F)_" + s(b) + "^" + s(mu), obsF(b, mu), V.A(b, mu), 1);
        for (int a = 1; a <= dim; ++a)
            for (int nu = 0; nu < kN; ++nu) {
                row("X(eta)^" + s(a) + "_" + s(nu), obs1(co.eta, a, nu), co.P[a - 1][nu], -1);
                row("X(lambda)^" + s(a) + "_" + s(nu), obs1(co.lam, a, nu), co.B[a - 1][nu], -1);
                row("X(rho)^" + s(a) + "_" + s(nu), obs1(co.rho, a, nu), co.C[a - 1][nu], -1);
            }
        for (int a = 1; a <= dim; ++a) {
            row("X(P)_" + s(a), mom(co.P[a - 1]), co.eta[a - 1], -1);
            row("X(B)_" + s(a), mom(co.B[a - 1]), co.lam[a - 1], 1);
            row("X(C)_" + s(a), mom(co.C[a - 1]), co.rho[a - 1], -1);
        }
    }
    rep.checks.push_back(xt);

    // BRST charge and its vector field
    auto Scomp = [&](int a, int nu) {  // S_a^nu
        Expr r = ps.zero();
        for (int b = 1; b <= dim; ++b)
            for (int cc = 1; cc <= dim; ++cc)
                for (int rr = 0; rr < kN; ++rr)
                    if (L.f(a, b, cc) != 0) r += V.xA(b, rr) * V.xF(cc, rr, nu) * L.f(a, b, cc);
        return r;
    };
    auto eta = [&](int a) { return ps.X(co.eta[a - 1]); };
    BrstCharge ups = build_brst_charge(ps, ChargeKind::Extended);
    YmCheck ch{"brst.charge", "Upsilon^YM = eta^a S_a - 1/2 eta^a eta^b f^c_ab P_c + B_a rho^a"};
    {
        Rows r(ch);
        Form e = ps.zero();
        for (int a = 1; a <= dim; ++a)
            for (int nu = 0; nu < kN; ++nu) {
                e += eta(a) * Scomp(a, nu) * ps.v(nu);
                for (int b = 1; b <= dim; ++b)
                    for (int cc = 1; cc <= dim; ++cc)
                        if (L.f(a, b, cc) != 0)
                            e -= eta(a) * eta(b) * ps.X(co.P[cc - 1][nu]) * ps.v(nu) * (L.f(a, b, cc) * Q(1, 2));
                e += ps.X(co.B[a - 1][nu]) * ps.X(co.rho[a - 1]) * ps.v(nu);
            }
        r.add("Upsilon", ups.form, e);
    }
    rep.checks.push_back(ch);

    VectorField XU = br.X(ups.form);
    YmCheck xu{"brst.vector_field", "X(Upsilon^YM)"};
    {
        Rows r(xu);
        VectorField e(&c);
        for (int a = 1; a <= dim; ++a) {
            for (int ee = 1; ee <= dim; ++ee)
                for (int ff = 1; ff <= dim; ++ff) {
                    auto k = L.f(a, ee, ff);
                    if (k == 0) continue;
                    for (int mu = 0; mu < kN; ++mu) {
                        e.add(V.A(ff, mu), eta(a) * V.xA(ee, mu) * k);
                        for (int nu = 0; nu < kN; ++nu) e.add(V.F(ee, mu, nu), eta(a) * V.xF(ff, mu, nu) * (-k));
                    }
                }
            for (int b = 1; b <= dim; ++b)
                for (int cc = 1; cc <= dim; ++cc)
                    if (L.f(a, b, cc) != 0) e.add(co.eta[cc - 1], eta(a) * eta(b) * (L.f(a, b, cc) * Q(1, 2)));
            for (int nu = 0; nu < kN; ++nu) {
                Expr k = Scomp(a, nu);
                for (int b = 1; b <= dim; ++b)
                    for (int cc = 1; cc <= dim; ++cc)
                        if (L.f(a, b, cc) != 0) k -= eta(b) * ps.X(co.P[cc - 1][nu]) * L.f(a, b, cc);
                e.add(co.P[a - 1][nu], -k);
                e.add(co.C[a - 1][nu], -ps.X(co.B[a - 1][nu]));
            }
            e.add(co.lam[a - 1], ps.X(co.rho[a - 1]));
        }
        r.add("X(Upsilon)", XU, e);
    }
    rep.checks.push_back(xu);

    // variation table: X(Upsilon) -| X(F) -| Omega
    auto var = [&](const Form& F) { return hook(XU, hook(br.X(F), om)); };
    auto add_var = [&](const char* id, const char* title, const std::function<void(Rows&)>& body) {
        YmCheck ck{id, title};
        Rows r(ck);
        body(r);
        rep.checks.push_back(ck);
    };
    add_var("variation.A", "X(Upsilon) -| X(A)^a_{mu nu} -| Omega = eta^c f^a_bc A^b_mu d3x_nu", [&](Rows& r) {
        for (int a = 1; a <= dim; ++a)
            for (int mu = 0; mu < kN; ++mu)
                for (int nu = 0; nu < kN; ++nu) {
                    Form e = ps.zero();
                    for (int b = 1; b <= dim; ++b)
                        for (int cc = 1; cc <= dim; ++cc)
                            if (L.f(b, cc, a) != 0) e += eta(cc) * V.xA(b, mu) * ps.v(nu) * L.f(b, cc, a);
                    r.add(s(a) + "," + idx({mu, nu}), var(obsA(a, mu, nu)), e);
                }
    });
    add_var("variation.F", "X(Upsilon) -| X(F)_b^mu -| Omega = -eta^a f_abc F_c^{mu nu} d3x_nu", [&](Rows& r) {
        for (int b = 1; b <= dim; ++b)
            for (int mu = 0; mu < kN; ++mu) {
                Form e = ps.zero();
                for (int a = 1; a <= dim; ++a)
                    for (int cc = 1; cc <= dim; ++cc)
                        for (int nu = 0; nu < kN; ++nu)
                            if (L.f(a, b, cc) != 0) e -= eta(a) * V.xF(cc, mu, nu) * ps.v(nu) * L.f(a, b, cc);
                r.add(s(b) + "," + s(mu), var(obsF(b, mu)), e);
            }
    });
    add_var("variation.eta", "X(Upsilon) -| X(eta)^c_nu -| Omega = 1/2 eta^a eta^b f^c_ab d3x_nu", [&](Rows& r) {
        for (int cc = 1; cc <= dim; ++cc)
            for (int nu = 0; nu < kN; ++nu) {
                Form e = ps.zero();
                for (int a = 1; a <= dim; ++a)
                    for (int b = 1; b <= dim; ++b)
                        if (L.f(a, b, cc) != 0) e += eta(a) * eta(b) * ps.v(nu) * (L.f(a, b, cc) * Q(1, 2));
                r.add(s(cc) + "," + s(nu), var(obs1(co.eta, cc, nu)), e);
            }
    });
    add_var("variation.P", "X(Upsilon) -| X(P)_a -| Omega = -(S_a^nu - eta^b f^c_ba P^nu_c) d3x_nu", [&](Rows& r) {
        for (int a = 1; a <= dim; ++a) {
            Form e = ps.zero();
            for (int nu = 0; nu < kN; ++nu) {
                Expr k = Scomp(a, nu);
                for (int b = 1; b <= dim; ++b)
                    for (int cc = 1; cc <= dim; ++cc)
                        if (L.f(b, a, cc) != 0) k -= eta(b) * ps.X(co.P[cc - 1][nu]) * L.f(b, a, cc);
                e -= k * ps.v(nu);
            }
            r.add(s(a), var(mom(co.P[a - 1])), e);
        }
    });
    add_var("variation.lambda", "X(Upsilon) -| X(lambda)^a_nu -| Omega = rho^a d3x_nu", [&](Rows& r) {
        for (int a = 1; a <= dim; ++a)
            for (int nu = 0; nu < kN; ++nu)
                r.add(s(a) + "," + s(nu), var(obs1(co.lam, a, nu)), ps.X(co.rho[a - 1]) * ps.v(nu));
    });
    add_var("variation.rho", "X(Upsilon) -| X(rho)^a_nu -| Omega = 0", [&](Rows& r) {
        for (int a = 1; a <= dim; ++a)
            for (int nu = 0; nu < kN; ++nu) r.add(s(a) + "," + s(nu), var(obs1(co.rho, a, nu)), ps.zero());
    });
    add_var("variation.C", "X(Upsilon) -| X(C)_b -| Omega = -B^nu_b d3x_nu", [&](Rows& r) {
        for (int b = 1; b <= dim; ++b) r.add(s(b), var(mom(co.C[b - 1])), -mom(co.B[b - 1]));
    });
    add_var("variation.B", "X(Upsilon) -| X(B)_b -| Omega = 0", [&](Rows& r) {
        for (int b = 1; b <= dim; ++b) r.add(s(b), var(mom(co.B[b - 1])), ps.zero());
    });
}

}  // namespace

TheorySpec yang_mills_spec(const StructureConstants& f, Variant v, bool extended) {
    TheorySpec s;
    s.name = "yang-mills";
    s.n = kN;
    s.fields = {FieldFamily{"A", "F", {f.dim, kN}, 1}};
    s.lie = StructureConstants(f.dim);
    for (size_t i = 0; i < f.c.size(); ++i) s.lie.c[i] = -f.c[i];
    s.action.kind = "adjoint";
    s.multipliers = s.ghosts = s.antighosts = extended;
    s.variant = v;
    return s;
}

YmReport yang_mills_suite(const YmOptions& opt) {
    Lie L{opt.f, opt.f.dim};
    if (L.dim <= 0) throw Error("Yang-Mills needs a Lie algebra of positive dimension");
    check_total_antisymmetry(L);
    YmReport rep;
    rep.dim = L.dim;
    {
        PhaseSpace ps = build_phase_space(yang_mills_spec(L.fc, Variant::Vertical, false));
        legendre_checks(L, ps, rep);
    }
    constraint_checks(L, rep);
    covariant_checks(L, rep);
    table_checks(L, rep);
    return rep;
}

std::string golden_dir(const std::string& fallback) {
    const char* e = std::getenv("ARTIFACT_GOLDEN_DIR");
    return e && *e ? std::string(e) : fallback;
}

std::vector<GoldenDiff> compare_goldens(const YmReport& rep, const std::string& dir) {
    std::vector<GoldenDiff> out;
    for (auto& c : rep.checks) {
        GoldenDiff g;
        g.id = c.id;
        std::ifstream in(std::filesystem::path(dir) / "ym" / (c.id + ".txt"));
        if (in) {
            g.present = true;
            std::vector<std::string> lines;
            for (std::string l; std::getline(in, l);) lines.push_back(l);
            g.match = lines == c.lines;
            for (size_t k = 0; !g.match && k < std::max(lines.size(), c.lines.size()); ++k) {
                std::string a = k < lines.size() ? lines[k] : "<none>";
                std::string b = k < c.lines.size() ? c.lines[k] : "<none>";
                if (a != b) {
                    g.first_diff = "line " + std::to_string(k + 1) + ": golden " + a + " ; computed " + b;
                    break;
                }
            }
        }
        out.push_back(g);
    }
    return out;
}

void write_goldens(const YmReport& rep, const std::string& dir) {
    auto base = std::filesystem::path(dir) / "ym";
    std::filesystem::create_directories(base);
    for (auto& c : rep.checks) {
        std::ofstream out(base / (c.id + ".txt"));
        for (auto& l : c.lines) out << l << '\n';
        if (!out) throw Error("cannot write golden file for " + c.id);
    }
}

}  // namespace artifact
