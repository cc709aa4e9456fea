#include "artifact/properties.hpp"

#include <algorithm>
#include <functional>

#include "artifact/brst.hpp"

namespace artifact {

namespace {

bool plain_gen(Role r) { return r != Role::Jet && r != Role::Function && r != Role::Param; }

bool config_role(Role r) {
    return r == Role::Field || r == Role::Multiplier || r == Role::Ghost || r == Role::Antighost;
}

}  // namespace

int FormGen::uniform(int lo, int hi) { return lo + (int)(rng_() % (uint64_t)(hi - lo + 1)); }

Q FormGen::coefficient() {
    int num = uniform(1, 3) * (uniform(0, 1) ? 1 : -1);
    Q q(num, uniform(1, 3));
    q.canonicalize();
    return q;
}

Expr FormGen::function(int max_coords) {
    const Chart& c = ps_.c();
    Expr r(&c, coefficient());
    int k = uniform(0, max_coords);
    for (int i = 0; i < k; ++i) {
        int g;
        do g = uniform(0, c.size() - 1);
        while (!plain_gen(c.gen(g).role));
        r = r * ps_.X(g);
    }
    return r;
}

Form FormGen::form(int k, int p, int terms) {
    const Chart& c = ps_.c();
    Form out(&c);
    int want = p;
    for (int attempt = 0; attempt < 200 && (int)out.size() < terms; ++attempt) {
        Form t = function(2);
        std::vector<int> used;
        for (int i = 0; i < k; ++i) {
            int g;
            do g = uniform(0, c.size() - 1);
            while (!plain_gen(c.gen(g).role) || std::find(used.begin(), used.end(), g) != used.end());
            used.push_back(g);
            t = t * ps_.D(g);
        }
        if (t.is_zero()) continue;
        int tp = t.parity();
        if (want < 0) want = tp;
        if (tp != want) continue;
        out += t;
        if (p < 0) break;
    }
    return out;
}

VectorField FormGen::vector_field(int parity, int comps) {
    const Chart& c = ps_.c();
    VectorField X(&c);
    for (int attempt = 0; attempt < 200 && (int)X.comps().size() < comps; ++attempt) {
        int g = uniform(0, c.size() - 1);
        if (!plain_gen(c.gen(g).role)) continue;
        Expr f = function(2);
        int fp = f.parity();
        if (fp < 0) continue;
        if ((fp + (c.gen(g).odd ? 1 : 0)) % 2 != parity) continue;
        X.add(g, f);
    }
    return X;
}

Expr FormGen::config_function(int h) {
    const Chart& c = ps_.c();
    std::vector<int> cfg;
    for (int g = 0; g < c.size(); ++g)
        if (config_role(c.gen(g).role)) cfg.push_back(g);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Expr r(&c, coefficient());
        int k = uniform(0, 2);
        for (int i = 0; i < k && !cfg.empty(); ++i) r = r * ps_.X(cfg[uniform(0, (int)cfg.size() - 1)]);
        if (!r.is_zero() && r.parity() == h) return r;
    }
    return Expr(&c);
}

Form FormGen::observable(int h) {
    const Chart& c = ps_.c();
    const Coords& co = ps_.co;
    const int n = ps_.n();
    std::vector<Form> pool;
    for (auto* v : {&co.u, &co.lam, &co.eta, &co.rho})
        for (int g : *v)
            for (int al = 0; al < n; ++al) pool.push_back(ps_.X(g) * ps_.v(al));
    auto rows = [&](const std::vector<std::vector<int>>& rs) {
        for (auto& row : rs) {
            Form m(&c);
            for (int al = 0; al < n; ++al) m += ps_.X(row[al]) * ps_.v(al);
            pool.push_back(m);
        }
    };
    rows(co.pu);
    rows(co.B);
    rows(co.P);
    rows(co.C);
    for (size_t a = 0; a < ps_.xi.size(); ++a)
        if (!ps_.xi[a].is_zero()) pool.push_back(ps_.delta((int)a));
    std::vector<Form> ok;
    for (auto& f : pool)
        if (f.parity() == h) ok.push_back(f);
    Form out(&c);
    if (ok.empty()) return out;
    int k = uniform(1, 3);
    for (int i = 0; i < k; ++i) out += ok[uniform(0, (int)ok.size() - 1)] * coefficient();
    return out;
}

namespace {

struct Law {
    PropertyResult r;
    void record(bool ok, const std::function<std::string()>& what) {
        ++r.instances;
        if (!ok) {
            if (r.failures == 0) r.first_failure = what();
            ++r.failures;
        }
    }
};

int sgn(int e) { return e % 2 ? -1 : 1; }

}  // namespace

std::vector<PropertyResult> run_property_suite(const PropertyOptions& opt) {
    // spaces: full graded-extended (n=2, su(2) adjoint on a triplet), vertical graded
    // (n=3, same algebra) and vertical plain (n=2, abelian translation)
    TheorySpec su2;
    su2.n = 2;
    su2.fields = {FieldFamily{"u", "p", {3}, 1}};
    su2.lie = levi_civita3();
    su2.action.kind = "adjoint";
    PhaseSpace full = build_phase_space(su2, Variant::GradedExtended);
    TheorySpec su2v = su2;
    su2v.n = 3;
    su2v.ghosts = true;
    PhaseSpace vg = build_phase_space(su2v, Variant::Vertical);
    TheorySpec ab;
    ab.n = 2;
    ab.fields = {FieldFamily{"u", "p", {2}, 1}};
    ab.lie = abelian(1);
    ab.action.kind = "translation";
    ab.multipliers = true;
    PhaseSpace vp = build_phase_space(ab, Variant::Vertical);
    std::vector<const PhaseSpace*> vertical = {&vg, &vp};
    std::vector<const PhaseSpace*> all = {&full, &vg, &vp};

    std::mt19937_64 master(opt.seed);
    auto gen_for = [&](const PhaseSpace& ps) { return FormGen(ps, master()); };
    auto pick = [&](const std::vector<const PhaseSpace*>& v) -> const PhaseSpace& {
        return *v[master() % v.size()];
    };
    std::vector<PropertyResult> out;

    {
        Law L{{"d^2 = 0"}};
        for (int i = 0; i < opt.count; ++i) {
            const PhaseSpace& ps = pick(all);
            FormGen g = gen_for(ps);
            Form a = g.form(g.uniform(0, ps.n()), -1, 3);
            L.record(d(d(a)).is_zero(), [&] { return to_string(a); });
        }
        out.push_back(L.r);
    }
    {
        Law L{{"wedge associativity"}};
        for (int i = 0; i < opt.count; ++i) {
            const PhaseSpace& ps = pick(all);
            FormGen g = gen_for(ps);
            Form a = g.form(g.uniform(0, 1)), b = g.form(g.uniform(0, 2)), c = g.form(g.uniform(0, 1));
            L.record((a * b) * c == a * (b * c), [&] { return to_string(a) + " | " + to_string(b) + " | " + to_string(c); });
        }
        out.push_back(L.r);
    }
    {
        Law L{{"hook antiderivation"}};
        for (int i = 0; L.r.instances < opt.count && i < 200 * opt.count; ++i) {
            const PhaseSpace& ps = pick(all);
            FormGen g = gen_for(ps);
            int px = g.uniform(0, 1);
            VectorField X = g.vector_field(px);
            int ka = g.uniform(1, 2), kb = g.uniform(1, 2);
            Form a = g.form(ka, g.uniform(0, 1)), b = g.form(kb, g.uniform(0, 1));
            if (X.is_zero() || a.is_zero() || b.is_zero() || (a * b).is_zero()) continue;
            int pa = a.parity();
            if (hook(X, a).is_zero() || hook(X, b).is_zero()) continue;
            Form lhs = hook(X, a * b);
            Form rhs = hook(X, a) * b + a * hook(X, b) * Q(sgn(ka + px * pa));
            L.record(lhs == rhs, [&] { return to_string(X) + " -| (" + to_string(a) + ") (" + to_string(b) + ")"; });
        }
        out.push_back(L.r);
    }
    {
        Law L{{"graded Jacobi (Lie bracket)"}};
        for (int i = 0; L.r.instances < opt.count && i < 200 * opt.count; ++i) {
            const PhaseSpace& ps = pick(all);
            FormGen g = gen_for(ps);
            int px = g.uniform(0, 1), py = g.uniform(0, 1), pz = g.uniform(0, 1);
            VectorField X = g.vector_field(px, 4), Y = g.vector_field(py, 4), Z = g.vector_field(pz, 4);
            if (lie_bracket(Y, lie_bracket(X, Z)).is_zero()) continue;
            VectorField lhs = lie_bracket(X, lie_bracket(Y, Z));
            VectorField rhs = lie_bracket(lie_bracket(X, Y), Z) + lie_bracket(Y, lie_bracket(X, Z)) * Q(sgn(px * py));
            L.record(lhs == rhs, [&] { return to_string(X) + " ; " + to_string(Y) + " ; " + to_string(Z); });
        }
        out.push_back(L.r);
    }

    // bracket laws on vertical spaces
    auto bidegree_of = [](const Form& F, int n) { return bidegree(F, n); };
    {
        Law L{{"Loday identity"}};
        for (int i = 0; L.r.instances < opt.count && i < 200 * opt.count; ++i) {
            const PhaseSpace& ps = pick(vertical);
            FormGen g = gen_for(ps);
            Bracket br(ps);
            int n = ps.n();
            Form F = g.observable(g.uniform(0, 1)), G = g.observable(g.uniform(0, 1)), H = g.observable(g.uniform(0, 1));
            // a configuration function may take the first or second slot
            int slot = g.uniform(0, 2);
            if (slot == 1) F = g.config_function(g.uniform(0, 1));
            if (slot == 2) G = g.config_function(g.uniform(0, 1));
            if (F.is_zero() || G.is_zero() || H.is_zero()) continue;
            BiDegree bf = bidegree_of(F, n), bg = bidegree_of(G, n);
            try {
                Form swapped = br(G, br(F, H));
                if (swapped.is_zero()) continue;
                Form lhs = br(br(F, G), H);
                Form rhs = br(F, br(G, H)) - swapped * Q(sgn(bf.g * bg.g + bf.h * bg.h));
                L.record(lhs == rhs, [&] { return to_string(F) + " ; " + to_string(G) + " ; " + to_string(H); });
            } catch (const NotHamiltonian&) {
                continue;
            }
        }
        out.push_back(L.r);
    }
    {
        Law L{{"right Leibniz rule"}};
        for (int i = 0; L.r.instances < opt.count && i < 200 * opt.count; ++i) {
            const PhaseSpace& ps = pick(vertical);
            FormGen g = gen_for(ps);
            Bracket br(ps);
            int n = ps.n();
            Form F = g.config_function(g.uniform(0, 1));
            Form G = g.observable(g.uniform(0, 1)), H = g.observable(g.uniform(0, 1));
            if (F.is_zero() || G.is_zero() || H.is_zero()) continue;
            BiDegree bg = bidegree_of(G, n), bh = bidegree_of(H, n);
            int kG = G.max_form_degree();
            try {
                if ((br(F, H) * G).is_zero()) continue;
                Form lhs = br(F * G, H);
                Form rhs = F * br(G, H) + br(F, H) * G * Q(sgn(kG * bh.g + bh.h * bg.h));
                L.record(lhs == rhs, [&] { return to_string(F) + " ; " + to_string(G) + " ; " + to_string(H); });
            } catch (const NotHamiltonian&) {
                continue;
            }
        }
        out.push_back(L.r);
    }
    {
        Law L{{"generalised commutativity"}};
        for (int i = 0; L.r.instances < opt.count && i < 200 * opt.count; ++i) {
            const PhaseSpace& ps = pick(vertical);
            FormGen g = gen_for(ps);
            Bracket br(ps);
            int n = ps.n();
            Form F = g.observable(g.uniform(0, 1)), G = g.observable(g.uniform(0, 1)), H = g.observable(g.uniform(0, 1));
            if (F.is_zero() || G.is_zero() || H.is_zero()) continue;
            BiDegree bf = bidegree_of(F, n), bg = bidegree_of(G, n);
            try {
                Form lhs = br(br(F, G), H);
                if (lhs.is_zero()) continue;
                Form rhs = -br(br(G, F), H) * Q(sgn(bf.g * bg.g + bf.h * bg.h));
                L.record(lhs == rhs, [&] { return to_string(F) + " ; " + to_string(G) + " ; " + to_string(H); });
            } catch (const NotHamiltonian&) {
                continue;
            }
        }
        out.push_back(L.r);
    }
    {
        Law L{{"normal form idempotent"}};
        for (int i = 0; i < opt.count; ++i) {
            const PhaseSpace& ps = pick(all);
            FormGen g = gen_for(ps);
            Form a = g.form(g.uniform(0, 3), -1, 3) * g.form(g.uniform(0, 1));
            L.record(a.normalized() == a && a.normalized().normalized() == a.normalized(),
                     [&] { return to_string(a); });
        }
        out.push_back(L.r);
    }
    {
        Law L{{"kernel_dim order invariance"}};
        Law R{{"structural round trip"}};
        for (int i = 0; L.r.instances < opt.count && i < 200 * opt.count; ++i) {
            const PhaseSpace& ps = pick(all);
            FormGen g = gen_for(ps);
            Form F = g.observable(g.uniform(0, 1));
            if (F.is_zero()) continue;
            SolveOptions a, b;
            b.reverse_columns = true;
            SolveResult ra = solve_structural(ps, F, a), rb = solve_structural(ps, F, b);
            L.record(ra.hamiltonian == rb.hamiltonian && ra.kernel_dim == rb.kernel_dim, [&] {
                return to_string(F) + ": " + std::to_string(ra.kernel_dim) + " vs " + std::to_string(rb.kernel_dim);
            });
            for (auto* r : {&ra, &rb}) {
                if (!r->hamiltonian) continue;
                Form res = hook(r->X, ps.omega) - d(F);
                if (ps.vertical()) res = drop_semibasic(res);
                R.record(res.is_zero(), [&] { return to_string(F) + " with X = " + to_string(r->X); });
            }
        }
        out.push_back(L.r);
        out.push_back(R.r);
    }
    return out;
}

}  // namespace artifact
