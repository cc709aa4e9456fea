#include "artifact/phase.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>

namespace artifact {

namespace {

const char* kVariantNames[] = {"plain",           "multiplier-extended", "graded",
                               "graded-extended", "vertical",            "lagrange-dalembert"};

std::string join_idx(const std::vector<int>& v) {
    bool wide = false;
    for (int i : v) wide |= (i > 9 || i < 0);
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) {
        if (wide && k) s += ",";
        s += std::to_string(v[k]);
    }
    return s;
}

// all index tuples of a family
void tuples(const std::vector<int>& ranges, int n_internal, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(ranges.size());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == ranges.size()) {
            out.push_back(cur);
            return;
        }
        bool internal = (int)k < n_internal;
        for (int i = 0; i < ranges[k]; ++i) {
            cur[k] = internal ? i + 1 : i;
            rec(k + 1);
        }
    };
    rec(0);
}

std::string field_label(const FieldFamily& f, const std::vector<int>& idx) {
    std::vector<int> in(idx.begin(), idx.begin() + f.n_internal);
    std::vector<int> st(idx.begin() + f.n_internal, idx.end());
    std::string s = f.name;
    if (!in.empty()) s += "^" + join_idx(in);
    if (!st.empty()) s += "_" + join_idx(st);
    return s;
}

std::string momentum_label(const FieldFamily& f, const std::vector<int>& idx, int alpha) {
    std::vector<int> in(idx.begin(), idx.begin() + f.n_internal);
    std::vector<int> st(idx.begin() + f.n_internal, idx.end());
    st.push_back(alpha);
    std::string s = f.momentum;
    if (!in.empty()) s += "_" + join_idx(in);
    s += "^" + join_idx(st);
    return s;
}

const std::set<std::string> kReserved = {"x",   "lambda", "eta", "rho", "B", "P",
                                         "C",   "p",      "xi",  "H",   "dxi", "dH"};

struct Opaque {
    int id;
    std::vector<int> deps;
    std::vector<int> first;                 // by dep position
    std::map<std::pair<int, int>, int> second;  // (i<=j) dep positions
};

Opaque register_opaque(Chart& c, const std::string& name, std::vector<int> idx,
                       const std::string& label, const std::vector<int>& deps) {
    Opaque o;
    o.deps = deps;
    o.id = c.add_function(name, idx, deps, label, false);
    for (size_t i = 0; i < deps.size(); ++i) {
        const Gen& g = c.gen(deps[i]);
        auto j = idx;
        j.push_back((int)i);
        o.first.push_back(c.add_function("d" + name, j, deps, "∂_{" + g.label + "}" + label,
                                         g.odd));
    }
    for (size_t i = 0; i < deps.size(); ++i)
        for (size_t k = i; k < deps.size(); ++k) {
            const Gen& gi = c.gen(deps[i]);
            const Gen& gk = c.gen(deps[k]);
            if (i == k && gi.odd) continue;
            auto j = idx;
            j.push_back((int)i);
            j.push_back((int)k);
            std::string lab = i == k ? "∂_{" + gi.label + "}^2" + label
                                     : "∂_{" + gk.label + "}∂_{" + gi.label + "}" + label;
            o.second[{(int)i, (int)k}] =
                c.add_function("dd" + name, j, deps, lab, gi.odd != gk.odd);
        }
    return o;
}

// after freeze
void link_opaque(Chart& c, const Opaque& o) {
    for (size_t i = 0; i < o.deps.size(); ++i) {
        c.set_partial(o.id, o.deps[i], Expr::coord(c, o.first[i]));
        for (size_t k = 0; k < o.deps.size(); ++k) {
            // d/d(dep k) of d/d(dep i) f
            bool oi = c.gen(o.deps[i]).odd, ok = c.gen(o.deps[k]).odd;
            if (i == k && oi) {
                c.set_partial(o.first[i], o.deps[k], Expr(&c));
                continue;
            }
            Q s = 1;
            int a = (int)i, b = (int)k;
            if (a > b) {
                std::swap(a, b);
                if (oi && ok) s = -1;
            }
            c.set_partial(o.first[i], o.deps[k], Expr::coord(c, o.second.at({a, b})) * s);
        }
    }
}

bool mentions(const Expr& e, int id) {
    if (!e.chart()) return false;
    uint32_t k0 = e.chart()->coord_key(id), k1 = e.chart()->diff_key(id);
    for (auto& [m, q] : e.terms())
        for (auto& f : m)
            if (f.key == k0 || f.key == k1) return true;
    return false;
}

}  // namespace

const char* variant_name(Variant v) { return kVariantNames[(int)v]; }

bool variant_from_name(const std::string& s, Variant& out) {
    for (int i = 0; i < 6; ++i)
        if (s == kVariantNames[i]) {
            out = (Variant)i;
            return true;
        }
    return false;
}

// ---------------------------------------------------------------------------

Form PhaseSpace::delta_of(const VectorField& w) const {
    const Chart& c = *chart;
    for (auto& [g, comp] : w.comps()) {
        const Gen& G = c.gen(g);
        if (G.role == Role::Base) {
            for (int u : co.u)
                if (!partial(comp, u).is_zero())
                    throw Error("non-projectable generator: component along " + G.label +
                                " depends on " + c.gen(u).label);
        } else if (G.role != Role::Field && G.role != Role::Multiplier && G.role != Role::Ghost &&
                   G.role != Role::Antighost) {
            throw Error("lifted observable of a field with a component along " + G.label);
        }
    }
    return hook(w, theta_canonical);
}

Form PhaseSpace::delta(int a) const { return delta_of(xi.at(a)); }

PhaseSpace build_phase_space(const TheorySpec& spec, Variant variant) {
    if (spec.n < 1) throw BuildError("base dimension must be positive");
    const int n = spec.n;
    const int dim = spec.lie.dim;
    bool lam = spec.multipliers || variant == Variant::MultiplierExtended ||
               variant == Variant::GradedExtended || variant == Variant::LagrangeDAlembert;
    bool eta = spec.ghosts || variant == Variant::Graded || variant == Variant::GradedExtended;
    bool rho = spec.antighosts || variant == Variant::GradedExtended;
    if (variant == Variant::LagrangeDAlembert) eta = rho = false;
    bool bmom = lam && variant != Variant::LagrangeDAlembert;
    bool affine = variant != Variant::Vertical;
    if ((lam || eta || rho || spec.action.kind != "none") && dim <= 0)
        throw BuildError("extension or action requires a Lie algebra of positive dimension");
    if ((int)spec.lie.c.size() != dim * dim * dim)
        throw BuildError("structure constant array does not match dim");
    if (variant == Variant::LagrangeDAlembert && spec.action.kind == "none")
        throw BuildError("the Lagrange-d'Alembert variant needs a generator action");

    std::set<std::string> names;
    for (auto& f : spec.fields) {
        if (f.ranges.empty() || f.n_internal < 0 || f.n_internal > (int)f.ranges.size())
            throw BuildError("field family " + f.name + ": bad index structure");
        for (size_t k = 0; k < f.ranges.size(); ++k) {
            if (f.ranges[k] <= 0) throw BuildError("field family " + f.name + ": empty range");
            if ((int)k >= f.n_internal && f.ranges[k] != n)
                throw BuildError("field family " + f.name + ": spacetime index range must be n");
        }
        for (auto* s : {&f.name, &f.momentum}) {
            bool reserved = kReserved.count(*s) && !(s == &f.momentum && *s == "p");
            if (s->empty() || reserved || !names.insert(*s).second)
                throw BuildError("field family name clash: " + *s);
        }
    }

    PhaseSpace ps;
    ps.spec = spec;
    ps.variant = variant;
    ps.chart = std::make_shared<Chart>(n);
    Chart& c = *ps.chart;
    Coords& co = ps.co;

    for (int a = 0; a < n; ++a) co.x.push_back(c.add("x", {a}, Role::Base, "x^" + std::to_string(a)));
    std::vector<std::pair<int, int>> field_of;  // flattened -> (family, tuple)
    std::vector<std::vector<int>> field_idx;
    for (size_t fi = 0; fi < spec.fields.size(); ++fi) {
        auto& f = spec.fields[fi];
        std::vector<std::vector<int>> ts;
        tuples(f.ranges, f.n_internal, ts);
        for (auto& t : ts) {
            co.u.push_back(c.add(f.name, t, Role::Field, field_label(f, t)));
            std::vector<int> mom;
            for (int al = 0; al < n; ++al) {
                auto j = t;
                j.push_back(al);
                mom.push_back(c.add(f.momentum, j, Role::FieldMom, momentum_label(f, t, al)));
            }
            co.pu.push_back(mom);
            field_of.push_back({(int)fi, (int)field_idx.size()});
            field_idx.push_back(t);
        }
    }
    auto lie_family = [&](bool on, const char* name, const char* sym, Role r, std::vector<int>& ids) {
        if (!on) return;
        for (int a = 1; a <= dim; ++a)
            ids.push_back(c.add(name, {a}, r, std::string(sym) + "^" + std::to_string(a)));
    };
    auto lie_mom = [&](bool on, const char* name, Role r, std::vector<std::vector<int>>& ids) {
        if (!on) return;
        for (int a = 1; a <= dim; ++a) {
            std::vector<int> row;
            for (int al = 0; al < n; ++al)
                row.push_back(c.add(name, {a, al}, r,
                                    std::string(name) + "_" + std::to_string(a) + "^" +
                                        std::to_string(al)));
            ids.push_back(row);
        }
    };
    lie_family(lam, "lambda", "λ", Role::Multiplier, co.lam);
    lie_family(eta, "eta", "η", Role::Ghost, co.eta);
    lie_family(rho, "rho", "ρ", Role::Antighost, co.rho);
    lie_mom(bmom, "B", Role::MultMom, co.B);
    lie_mom(eta, "P", Role::GhostMom, co.P);
    lie_mom(rho, "C", Role::AntighostMom, co.C);
    if (affine) co.p = c.add("p", {}, Role::Affine, "p");

    // jet symbols of every fiber coordinate
    std::vector<int> fibers;
    for (auto* v : {&co.u, &co.lam, &co.eta, &co.rho}) fibers.insert(fibers.end(), v->begin(), v->end());
    for (auto& v : co.pu) fibers.insert(fibers.end(), v.begin(), v.end());
    for (auto* vv : {&co.B, &co.P, &co.C})
        for (auto& v : *vv) fibers.insert(fibers.end(), v.begin(), v.end());
    for (int g : fibers) {
        Gen G = c.gen(g);
        std::vector<int> row;
        for (int al = 0; al < n; ++al) {
            auto j = G.indices;
            j.push_back(al);
            row.push_back(c.add(G.name + ",", j, Role::Jet, G.label + "_{," + std::to_string(al) + "}",
                                G.odd ? 1 : 0));
        }
        co.jet[g] = row;
    }

    std::vector<Opaque> opaque;
    std::vector<std::vector<std::pair<int, int>>> xi_fn(dim);  // (target gen, function id)
    if (spec.action.kind == "opaque") {
        std::vector<int> deps = co.x;
        deps.insert(deps.end(), co.u.begin(), co.u.end());
        for (int a = 1; a <= dim; ++a) {
            for (size_t k = 0; k < co.u.size(); ++k) {
                std::string lab = "ξ^{" + c.gen(co.u[k]).label + "}_" + std::to_string(a);
                opaque.push_back(register_opaque(c, "xi", {a, (int)k}, lab, deps));
                xi_fn[a - 1].push_back({co.u[k], opaque.back().id});
            }
            if (spec.action.base_components)
                for (int be = 0; be < n; ++be) {
                    std::string lab = "ξ^{x^" + std::to_string(be) + "}_" + std::to_string(a);
                    opaque.push_back(register_opaque(c, "xi", {a, -1 - be}, lab, co.x));
                    xi_fn[a - 1].push_back({co.x[be], opaque.back().id});
                }
        }
    }
    int hfn = -1;
    if (spec.hamiltonian == "opaque") {
        std::vector<int> deps = co.x;
        if (variant == Variant::LagrangeDAlembert) {
            deps.insert(deps.end(), co.u.begin(), co.u.end());
            for (auto& v : co.pu) deps.insert(deps.end(), v.begin(), v.end());
        } else {
            deps.insert(deps.end(), fibers.begin(), fibers.end());
        }
        opaque.push_back(register_opaque(c, "H", {}, "H", deps));
        hfn = opaque.back().id;
    }

    c.freeze();
    for (auto& o : opaque) link_opaque(c, o);

    // generator action
    ps.xi.assign(dim, VectorField(&c));
    const std::string& kind = spec.action.kind;
    if (kind == "adjoint") {
        bool any = false;
        for (size_t k = 0; k < co.u.size(); ++k) {
            auto& fam = spec.fields[field_of[k].first];
            if (fam.n_internal < 1 || fam.ranges[0] != dim) continue;
            any = true;
            const auto& t = field_idx[k];
            for (int a = 0; a < dim; ++a)
                for (int i = 1; i <= dim; ++i) {
                    const Q& cf = spec.lie.at(i - 1, a, t[0] - 1);
                    if (cf == 0) continue;
                    auto ti = t;
                    ti[0] = i;
                    int target = c.require(fam.name, ti);
                    ps.xi[a].add(target, ps.X(co.u[k]) * Q(-cf));
                }
        }
        if (!any) throw BuildError("adjoint action: no field family carries an algebra index");
    } else if (kind == "translation") {
        if ((int)co.u.size() < dim) throw BuildError("translation action needs dim field components");
        for (int a = 0; a < dim; ++a) ps.xi[a].add(co.u[a], ps.one());
    } else if (kind == "opaque") {
        for (int a = 0; a < dim; ++a)
            for (auto& [g, f] : xi_fn[a]) ps.xi[a].add(g, ps.X(f));
    } else if (kind == "explicit") {
        if ((int)spec.action.components.size() != dim)
            throw BuildError("explicit action: one component list per algebra element required");
        for (int a = 0; a < dim; ++a)
            for (auto& [ref, txt] : spec.action.components[a]) {
                auto where = "action component " + std::to_string(a + 1) + " " + ref + ": ";
                int g;
                Expr e;
                try {
                    g = parse_gen_ref(c, ref);
                    e = parse_expr(c, txt);
                } catch (const ParseError& err) {
                    throw ParseError(where + err.what());
                }
                Role r = c.gen(g).role;
                if (r != Role::Base && r != Role::Field && r != Role::Multiplier && r != Role::Ghost &&
                    r != Role::Antighost)
                    throw BuildError("explicit action component along a non-configuration coordinate");
                ps.xi[a].add(g, e);
            }
    } else if (kind != "none") {
        throw BuildError("unknown action kind: " + kind);
    }
    for (int a = 0; a < dim; ++a)
        if (ps.xi[a].parity() == 1) throw BuildError("generator action must be even");

    // Hamiltonian
    if (hfn >= 0) {
        ps.H = ps.X(hfn);
    } else if (!spec.hamiltonian.empty()) {
        Expr h;
        try {
            h = parse_expr(c, spec.hamiltonian);
        } catch (const ParseError& err) {
            throw ParseError(std::string("hamiltonian: ") + err.what());
        }
        if (h.max_form_degree() > 0) throw BuildError("Hamiltonian must be a function");
        if (h.parity() == 1 || (h.parity() < 0 && !h.is_zero()))
            throw BuildError("Hamiltonian must be Grassmann-even");
        if (co.p >= 0 && mentions(h, co.p)) throw BuildError("Hamiltonian contains p");
        ps.H = h;
    }

    // Cartan forms
    Form th(&c);
    if (co.p >= 0) th += ps.X(co.p) * ps.vn();
    for (size_t k = 0; k < co.u.size(); ++k)
        for (int al = 0; al < n; ++al) th += ps.X(co.pu[k][al]) * ps.D(co.u[k]) * ps.v(al);
    for (int a = 0; a < (int)co.B.size(); ++a)
        for (int al = 0; al < n; ++al) th += ps.X(co.B[a][al]) * ps.D(co.lam[a]) * ps.v(al);
    for (int a = 0; a < (int)co.P.size(); ++a)
        for (int al = 0; al < n; ++al) th += ps.X(co.P[a][al]) * ps.D(co.eta[a]) * ps.v(al);
    for (int a = 0; a < (int)co.C.size(); ++a)
        for (int al = 0; al < n; ++al) th += ps.X(co.C[a][al]) * ps.D(co.rho[a]) * ps.v(al);

    ps.theta_canonical = th;
    Form om = -d(th);
    if (variant == Variant::LagrangeDAlembert) {
        for (int a = 0; a < dim; ++a) {
            Form dd = d(ps.delta(a));
            om += ps.D(co.lam[a]) * dd;
            th -= ps.X(co.lam[a]) * dd;
        }
        if (om != -d(th)) throw BuildError("internal: omega != -d theta");
    }
    if (!d(om).is_zero()) throw BuildError("internal: omega is not closed");
    ps.theta = th;
    ps.omega = variant == Variant::Vertical ? drop_semibasic(om) : om;
    return ps;
}

Form pull_back_section(const PhaseSpace& ps, const Form& omega, const Expr& H) {
    if (ps.co.p < 0) throw SectionError("phase space has no affine coordinate p");
    if (mentions(H, ps.co.p)) throw SectionError("Hamiltonian contains p");
    if (H.max_form_degree() > 0) throw SectionError("Hamiltonian must be a function");
    if (!H.is_zero() && H.parity() != 0) throw SectionError("Hamiltonian must be Grassmann-even");
    Expr h = H.chart() ? H : Expr(ps.chart.get());
    return substitute(omega, {{ps.co.p, -h}});
}

// ---------------------------------------------------------------------------
// Solver

namespace {

struct Unknown {
    int rank;
    int g;
    Mono m;
    bool operator<(const Unknown& o) const {
        return rank != o.rank ? rank < o.rank : m < o.m;
    }
};

struct LinResult {
    bool consistent = true;
    Mono bad_row;
    long rank = 0;
    std::vector<Q> values;
};

// Exact sparse elimination; pivot = lowest column index in the reduced row.
LinResult eliminate(const std::map<Mono, std::map<int, Q>>& rows, const std::map<Mono, Q>& rhs,
                    size_t ncols) {
    LinResult res;
    std::vector<std::map<int, Q>> prow;
    std::vector<Q> pb;
    std::vector<int> pcol;
    std::map<int, int> pivot_of;  // column -> pivot order
    auto process = [&](const Mono& mono, std::map<int, Q> r, Q b) -> bool {
        std::priority_queue<int, std::vector<int>, std::greater<int>> pq;
        std::set<int> queued;
        for (auto& [cidx, q] : r) {
            auto it = pivot_of.find(cidx);
            if (it != pivot_of.end() && queued.insert(it->second).second) pq.push(it->second);
        }
        while (!pq.empty()) {
            int t = pq.top();
            pq.pop();
            auto it = r.find(pcol[t]);
            if (it == r.end()) continue;
            Q f = it->second;
            for (auto& [cidx, q] : prow[t]) {
                Q& slot = r[cidx];
                slot -= f * q;
                if (slot == 0) {
                    r.erase(cidx);
                } else {
                    auto jt = pivot_of.find(cidx);
                    if (jt != pivot_of.end() && jt->second != t && queued.insert(jt->second).second)
                        pq.push(jt->second);
                }
            }
            b -= f * pb[t];
        }
        if (r.empty()) {
            if (b != 0) {
                res.consistent = false;
                res.bad_row = mono;
                return false;
            }
            return true;
        }
        int pc = r.begin()->first;
        Q inv = 1 / r.begin()->second;
        for (auto& [cidx, q] : r) q *= inv;
        b *= inv;
        pivot_of[pc] = (int)prow.size();
        prow.push_back(std::move(r));
        pb.push_back(b);
        pcol.push_back(pc);
        return true;
    };
    for (auto& [mono, r] : rows) {
        auto it = rhs.find(mono);
        if (!process(mono, r, it == rhs.end() ? Q(0) : it->second)) return res;
    }
    for (auto& [mono, b] : rhs)
        if (!rows.count(mono)) {
            res.consistent = false;
            res.bad_row = mono;
            return res;
        }
    res.rank = (long)prow.size();
    res.values.assign(ncols, Q(0));
    for (int t = (int)prow.size() - 1; t >= 0; --t) {
        Q v = pb[t];
        for (auto& [cidx, q] : prow[t])
            if (cidx != pcol[t]) v -= q * res.values[cidx];
        res.values[pcol[t]] = v;
    }
    return res;
}

bool solvable_role(Role r, bool vertical) {
    switch (r) {
        case Role::Base: return !vertical;
        case Role::Field:
        case Role::Multiplier:
        case Role::Ghost:
        case Role::Antighost:
        case Role::FieldMom:
        case Role::MultMom:
        case Role::GhostMom:
        case Role::AntighostMom:
        case Role::Affine: return true;
        default: return false;
    }
}

Form single_term(const Chart& c, const Mono& m, const Q& q) {
    Form f(&c);
    f.add_term(m, q);
    return f;
}

}  // namespace

SolveResult solve_structural(const PhaseSpace& ps, const Form& omega, const Form& F,
                             SolveOptions opt) {
    const Chart& c = *ps.chart;
    const int n = c.n();
    SolveResult res;
    res.X = VectorField(&c);
    if (!F.is_zero() && (!F.homogeneous_degree() || F.max_form_degree() != n - 1))
        throw DegreeError("structural equation needs a homogeneous (n-1)-form");
    bool vert = opt.vertical || ps.vertical();
    Form target = d(F);
    if (vert) target = drop_semibasic(target);
    if (target.is_zero()) {
        res.hamiltonian = true;
        return res;
    }
    int pF = F.parity();

    // hook images and their differential patterns
    std::map<int, Form> hooks;
    std::map<Mono, std::vector<std::pair<int, Mono>>> pattern;
    for (int g = 0; g < c.size(); ++g) {
        if (!solvable_role(c.gen(g).role, vert)) continue;
        Form h = hook_gen(g, omega);
        if (vert) h = drop_semibasic(h);
        if (h.is_zero()) continue;
        hooks.emplace(g, h);
        for (auto& [m, q] : h.terms()) pattern[mono_diff_part(m)].push_back({g, mono_coord_part(m)});
    }
    for (auto& [m, q] : target.terms())
        if (!pattern.count(mono_diff_part(m))) {
            res.witness = single_term(c, m, q);
            res.witness_text = to_string(res.witness);
            return res;
        }

    std::set<Unknown> unknowns;
    bool discarded = false;
    auto propose = [&](const Mono& row) -> int {
        auto it = pattern.find(mono_diff_part(row));
        if (it == pattern.end()) return 0;
        Mono cp = mono_coord_part(row);
        int added = 0;
        for (auto& [g, cc] : it->second) {
            Mono m;
            if (!mono_div(c, cp, cc, m)) continue;
            if (pF >= 0 && ((mono_parity(c, m) + (c.gen(g).odd ? 1 : 0)) & 1) != pF) continue;
            if (mono_total_degree(m) > opt.degree_cap) {
                discarded = true;
                continue;
            }
            if (unknowns.insert({c.gen(g).rank, g, m}).second) ++added;
        }
        return added;
    };
    for (auto& [m, q] : target.terms()) propose(m);

    std::map<Mono, Q> rhs(target.terms().begin(), target.terms().end());
    for (;;) {
        std::vector<Unknown> cols(unknowns.begin(), unknowns.end());
        if (opt.reverse_columns) std::reverse(cols.begin(), cols.end());
        std::map<Mono, std::map<int, Q>> rows;
        for (size_t j = 0; j < cols.size(); ++j) {
            Form col = single_term(c, cols[j].m, 1) * hooks.at(cols[j].g);
            for (auto& [m, q] : col.terms()) rows[m][(int)j] += q;
        }
        LinResult lr = eliminate(rows, rhs, cols.size());
        if (lr.consistent) {
            res.hamiltonian = true;
            res.unknowns = (long)cols.size();
            res.kernel_dim = (long)cols.size() - lr.rank;
            for (size_t j = 0; j < cols.size(); ++j)
                if (lr.values[j] != 0) res.X.add(cols[j].g, single_term(c, cols[j].m, lr.values[j]));
            Form back = hook(res.X, omega);
            if (vert) back = drop_semibasic(back);
            if (back != target) throw Error("internal: structural solution fails round trip");
            return res;
        }
        int added = 0;
        for (auto& [m, r] : rows) added += propose(m);
        if (added == 0) {
            if (discarded)
                throw CapExceeded("structural ansatz exceeds the coefficient degree cap " +
                                  std::to_string(opt.degree_cap));
            auto it = target.terms().find(lr.bad_row);
            res.witness = single_term(c, lr.bad_row, it == target.terms().end() ? Q(1) : it->second);
            res.witness_text = to_string(res.witness);
            return res;
        }
    }
}

SolveResult solve_structural(const PhaseSpace& ps, const Form& F, SolveOptions opt) {
    return solve_structural(ps, ps.omega, F, opt);
}

// ---------------------------------------------------------------------------

Bracket::Bracket(const PhaseSpace& ps, Form omega, SolveOptions opt)
    : ps_(ps), omega_(std::move(omega)), opt_(opt) {}

Bracket::Bracket(const PhaseSpace& ps) : Bracket(ps, ps.omega, SolveOptions{}) {}

VectorField Bracket::X(const Form& F) const {
    std::vector<std::pair<Mono, std::string>> key;
    for (auto& [m, q] : F.terms()) key.push_back({m, q.get_str()});
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    SolveResult r = solve_structural(ps_, omega_, F, opt_);
    if (!r.hamiltonian)
        throw NotHamiltonian("not Hamiltonian: " + to_string(F) + "; unmatched " + r.witness_text,
                             r.witness);
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(key, r.X);
    return r.X;
}

Form Bracket::operator()(const Form& F, const Form& G) const {
    if (F.is_zero()) return Form(ps_.chart.get());
    if (!F.homogeneous_degree()) throw DegreeError("bracket of a mixed-degree form");
    int k = F.max_form_degree();
    if (k == 0) {
        if (G.is_zero()) return Form(ps_.chart.get());
        if (!G.homogeneous_degree() || G.max_form_degree() != ps_.n() - 1)
            throw DegreeError("bracket of a function needs an (n-1)-form second argument");
        int hf = F.parity(), hg = G.parity();
        if (hf < 0 || hg < 0) throw DegreeError("bracket of a function needs homogeneous parity");
        Form r = hook(X(G), d(F));
        return (hf & hg) ? -r : r;
    }
    VectorField XF = X(F);
    Form dG = d(G);
    if (dG.is_zero()) return Form(ps_.chart.get());
    Form r = hook(XF, dG);
    return ((ps_.n() - k) % 2) ? -r : r;
}

BiDegree bidegree(const Form& F, int n) {
    return {n - F.max_form_degree() - 1, F.parity()};
}

// ---------------------------------------------------------------------------

namespace {
bool single_coordinate(const Mono& m) {
    return m.size() == 1 && m[0].exp == 1 && fcat(m[0].key) == 0;
}
}  // namespace

ConstraintIdeal::ConstraintIdeal(std::vector<Expr> gens) {
    for (auto& g0 : gens) {
        Expr g = reduce(g0);
        if (g.is_zero()) continue;
        const Mono* lead = nullptr;
        Q lq;
        for (auto& [m, q] : g.terms())
            if (single_coordinate(m)) {
                lead = &m;
                lq = q;
            }
        if (!lead) {
            lead = &g.terms().rbegin()->first;
            lq = g.terms().rbegin()->second;
        }
        Mono L = *lead;
        Expr rest = g;
        Expr lt(g.chart());
        lt.add_term(L, lq);
        rest -= lt;
        Expr repl = rest * Q(-1 / lq);
        rules_.push_back({L, repl});
        // keep earlier replacements reduced
        for (size_t i = 0; i + 1 < rules_.size(); ++i) rules_[i].second = reduce(rules_[i].second);
    }
}

Expr ConstraintIdeal::reduce(const Expr& e0) const {
    Expr e = e0;
    for (int iter = 0; iter < 64; ++iter) {
        Expr prev = e;
        for (auto& [L, repl] : rules_) {
            if (!e.chart()) break;
            if (single_coordinate(L)) {
                int id = e.chart()->id_of_key(L[0].key);
                e = substitute(e, {{id, repl}});
            } else {
                auto it = e.terms().find(L);
                if (it == e.terms().end()) continue;
                Q q = it->second;
                Expr lt(e.chart());
                lt.add_term(L, q);
                e -= lt;
                e += repl * q;
            }
        }
        if (e == prev) return e;
    }
    throw Error("constraint reduction does not terminate");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    const Chart& c;
    const std::string& s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    [[noreturn]] void fail(const std::string& m) {
        throw ParseError(m + " at column " + std::to_string(i + 1) + " in '" + s + "'");
    }
    bool eat(char ch) {
        ws();
        if (i < s.size() && s[i] == ch) {
            ++i;
            return true;
        }
        return false;
    }
    long integer() {
        ws();
        size_t j = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (j == i) fail("expected integer");
        return std::stol(s.substr(j, i - j));
    }
    int gen_ref() {
        ws();
        size_t j = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        if (j == i) fail("expected generator");
        std::string name = s.substr(j, i - j);
        std::vector<int> idx;
        if (eat('[')) {
            if (!eat(']')) {
                do {
                    bool neg = eat('-');
                    long v = integer();
                    idx.push_back((int)(neg ? -v : v));
                } while (eat(','));
                if (!eat(']')) fail("expected ]");
            }
        }
        int id = c.find(name, idx);
        if (id < 0) fail("unknown generator " + name + "[" + join_idx(idx) + "]");
        return id;
    }
    Expr primary() {
        ws();
        if (eat('(')) {
            Expr e = sum();
            if (!eat(')')) fail("expected )");
            return e;
        }
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            Q q(integer());
            return Expr(&c, q);
        }
        // d(e), vol(), vol1(a), vol2(a,b)
        size_t j = i;
        while (j < s.size() && std::isalnum((unsigned char)s[j])) ++j;
        std::string word = s.substr(i, j - i);
        size_t k = j;
        while (k < s.size() && std::isspace((unsigned char)s[k])) ++k;
        if (k < s.size() && s[k] == '(' && (word == "d" || word == "vol" || word == "vol1" || word == "vol2")) {
            i = k + 1;
            if (word == "d") {
                Expr r = artifact::d(sum());
                if (!eat(')')) fail("expected )");
                return r;
            }
            std::vector<int> a;
            if (!eat(')')) {
                do {
                    a.push_back((int)integer());
                    if (a.back() >= c.n()) fail("base index out of range");
                } while (eat(','));
                if (!eat(')')) fail("expected )");
            }
            size_t want = word == "vol" ? 0 : word == "vol1" ? 1 : 2;
            if (a.size() != want) fail(word + " takes " + std::to_string(want) + " indices");
            return want == 0 ? vol(c) : want == 1 ? vol1(c, a[0]) : vol2(c, a[0], a[1]);
        }
        return Expr::coord(c, gen_ref());
    }
    Expr power() {
        Expr b = primary();
        if (eat('^')) {
            long k = integer();
            Expr r(&c, 1);
            for (long t = 0; t < k; ++t) r = r * b;
            return r;
        }
        return b;
    }
    Expr unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Expr product() {
        Expr r = unary();
        for (;;) {
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                Expr den = unary();
                if (den.max_form_degree() != 0 || den.size() != 1 || !den.terms().begin()->first.empty())
                    fail("division by a non-constant");
                Q q = den.terms().begin()->second;
                r *= Q(1 / q);
            } else {
                return r;
            }
        }
    }
    Expr sum() {
        Expr r = product();
        for (;;) {
            if (eat('+')) r += product();
            else if (eat('-')) r -= product();
            else return r;
        }
    }
};

}  // namespace

Expr parse_expr(const Chart& c, const std::string& text) {
    Parser p{c, text};
    Expr e = p.sum();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    if (!e.chart()) e = Expr(&c);
    return Expr(&c) + e;
}

int parse_gen_ref(const Chart& c, const std::string& text) {
    Parser p{c, text};
    int id = p.gen_ref();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return id;
}

}  // namespace artifact
