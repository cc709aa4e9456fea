#include "artifact/brst.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace artifact {

namespace {

Form mom_form(const PhaseSpace& ps, const std::vector<int>& row) {
    Form f = ps.zero();
    for (int al = 0; al < (int)row.size(); ++al) f += ps.X(row[al]) * ps.v(al);
    return f;
}

Form pulled(const PhaseSpace& ps, const Form& f, const std::optional<Expr>& H) {
    if (!H || ps.co.p < 0) return f;
    return substitute(f, {{ps.co.p, -*H}});
}

}  // namespace

Form lifted_observable_formula(const PhaseSpace& ps, const VectorField& xi) {
    const auto& co = ps.co;
    const int n = ps.n();
    Form r = ps.zero();
    auto comp = [&](int g) {
        const Expr* e = xi.comp(g);
        return e ? *e : ps.zero();
    };
    std::vector<std::pair<int, const std::vector<int>*>> sectors;
    for (size_t k = 0; k < co.u.size(); ++k) sectors.push_back({co.u[k], &co.pu[k]});
    for (size_t a = 0; a < co.B.size(); ++a) sectors.push_back({co.lam[a], &co.B[a]});
    for (auto& [g, mom] : sectors) {
        Expr w = comp(g);
        for (int al = 0; al < n; ++al) {
            Expr pm = ps.X((*mom)[al]);
            r += pm * w * ps.v(al);
            for (int be = 0; be < n; ++be) {
                Expr wb = comp(co.x[be]);
                if (wb.is_zero()) continue;
                r -= pm * wb * ps.D(g) * ps.v2(al, be);
            }
        }
    }
    if (co.p >= 0)
        for (int al = 0; al < n; ++al) r += ps.X(co.p) * comp(co.x[al]) * ps.v(al);
    return r;
}

NoetherCurrent lift_momentum_observable(const PhaseSpace& ps, const VectorField& xi, int a) {
    bool base = false;
    for (auto& [g, e] : xi.comps()) {
        Role r = ps.c().gen(g).role;
        if (r == Role::Ghost || r == Role::Antighost)
            throw Error("lifted observable: generator has a component along " + ps.c().gen(g).label);
        base |= r == Role::Base;
    }
    Form hooked = ps.delta_of(xi);  // also rejects non-projectable generators
    Form f = lifted_observable_formula(ps, xi);
    // contracting base components into the ghost sector of theta adds terms the
    // configuration-level formula does not have; compare only without them
    bool extra = !ps.co.P.empty() || !ps.co.C.empty();
    if ((!base || !extra) && f != hooked)
        throw Error("internal: lifted observable disagrees with the coordinate formula");
    return {a, f};
}

VectorField build_brst_vector_field(const PhaseSpace& ps, bool extended, bool check) {
    const auto& co = ps.co;
    const auto& sc = ps.spec.lie;
    if (co.eta.empty()) throw BuildError("BRST vector field needs the ghost sector");
    if (extended && (co.rho.empty() || co.lam.empty()))
        throw BuildError("extended BRST vector field needs multipliers and antighosts");
    if (check) {
        StructureReport rep = check_structure_constants(sc);
        if (!rep.antisymmetry) {
            auto w = rep.antisym_violations.front();
            throw Error("structure constants are not antisymmetric at C^" + std::to_string(w[0]) +
                        "_" + std::to_string(w[1]) + std::to_string(w[2]));
        }
        if (!rep.jacobi) {
            auto w = rep.jacobi_violations.front();
            throw JacobiFailure("Jacobi identity fails at (" + std::to_string(w[0]) + "," +
                                    std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
                                    std::to_string(w[3]) + ")",
                                w);
        }
    }
    const int dim = sc.dim;
    VectorField V(ps.chart.get());
    for (int a = 0; a < dim; ++a) V += ps.X(co.eta[a]) * ps.xi[a];
    for (int c = 0; c < dim; ++c) {
        Expr e = ps.zero();
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                const Q& q = sc.at(c, a, b);
                if (q != 0) e += ps.X(co.eta[a]) * ps.X(co.eta[b]) * Q(-q / 2);
            }
        if (!e.is_zero()) V.add(co.eta[c], e);
    }
    if (extended)
        for (int a = 0; a < dim; ++a) V.add(co.lam[a], ps.X(co.rho[a]));
    if (check && !lie_bracket(V, V).is_zero())
        throw Error("[V,V] != 0: the generator action is not a representation of the algebra");
    return V;
}

BrstCharge build_brst_charge(const PhaseSpace& ps, ChargeKind kind, const Expr* H) {
    const auto& co = ps.co;
    const auto& sc = ps.spec.lie;
    const int dim = sc.dim;
    if (co.eta.empty() || co.P.empty()) throw BuildError("BRST charge needs the ghost sector");
    bool ext = kind == ChargeKind::Extended;
    if (ext && (co.rho.empty() || co.B.empty()))
        throw BuildError("extended BRST charge needs multipliers and antighosts");

    BrstCharge out;
    bool base_action = false;
    out.kind = kind;
    out.ghost = out.current = out.extension = ps.zero();
    for (int a = 0; a < dim; ++a) {
        Form Pa = mom_form(ps, co.P[a]);
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c) {
                const Q& q = sc.at(a, b, c);
                if (q != 0) out.ghost += ps.X(co.eta[b]) * ps.X(co.eta[c]) * Pa * (q / 2);
            }
        out.current += ps.X(co.eta[a]) * lift_momentum_observable(ps, ps.xi[a], a + 1).form;
        for (auto& [g, e] : ps.xi[a].comps()) base_action |= ps.c().gen(g).role == Role::Base;
        if (ext) out.extension += ps.X(co.rho[a]) * mom_form(ps, co.B[a]);
    }
    out.form = out.ghost + out.current + out.extension;

    // with base components V -| theta also contracts the ghost sector; the charge is
    // the coordinate expression, which equals the lift only for xi^al = 0
    VectorField V = build_brst_vector_field(ps, ext, false);
    if (!base_action && ps.delta_of(V) != out.form)
        throw Error("internal: charge differs from the lift of V: " + to_string(ps.delta_of(V) - out.form));

    if (H && ps.co.p >= 0) {
        out.H = *H;
        out.ghost = pulled(ps, out.ghost, out.H);
        out.current = pulled(ps, out.current, out.H);
        out.extension = pulled(ps, out.extension, out.H);
        out.form = out.ghost + out.current + out.extension;
    }
    return out;
}

NilpotencyReport check_nilpotency(const Bracket& br, const BrstCharge& Q) {
    const PhaseSpace& ps = br.ps();
    NilpotencyReport rep;
    rep.jacobi = rep.cancellation = rep.extension = ps.zero();
    std::vector<std::pair<std::string, const Form*>> parts{
        {"ghost", &Q.ghost}, {"current", &Q.current}, {"extension", &Q.extension}};
    for (auto& [ni, fi] : parts) {
        if (fi->is_zero()) continue;
        for (auto& [nj, fj] : parts) {
            if (fj->is_zero()) continue;
            LedgerEntry e;
            e.pair = ni + "," + nj;
            e.value = br(*fi, *fj);
            if (ni == "extension" || nj == "extension") {
                e.group = "extension";
                rep.extension += e.value;
            } else if (ni == "ghost" && nj == "ghost") {
                e.group = "jacobi";
                rep.jacobi += e.value;
            } else {
                e.group = "cancellation";
                rep.cancellation += e.value;
            }
            rep.ledger.push_back(std::move(e));
        }
    }
    rep.value = br(Q.form, Q.form);
    if (rep.value != rep.jacobi + rep.cancellation + rep.extension)
        throw Error("internal: ledger does not add up to {Q,Q}");
    rep.is_zero = rep.value.is_zero();
    return rep;
}

Variation brst_variation(const Bracket& br, const BrstCharge& Q, const Form& F) {
    Variation v;
    VectorField XQ = br.X(Q.form);
    VectorField XF = br.X(F);
    v.hooked = hook(XQ, hook(XF, br.omega()));
    v.bracket = br(F, Q.form);
    return v;
}

std::vector<GeneratorRow> reduction_generator_actions(const Bracket& br, const BrstCharge& Q) {
    const PhaseSpace& ps = br.ps();
    const auto& co = ps.co;
    const auto& sc = ps.spec.lie;
    const int dim = sc.dim;
    const int n = ps.n();
    if (Q.kind != ChargeKind::Minimal) throw Error("generator actions are defined for the minimal charge");
    std::vector<GeneratorRow> rows;
    auto row = [&](std::string label, Form computed, Form expected) {
        GeneratorRow r{std::move(label), std::move(computed), std::move(expected), false};
        r.ok = r.computed == r.expected;
        rows.push_back(std::move(r));
    };
    std::vector<Form> dH(dim);
    for (int a = 0; a < dim; ++a) dH[a] = pulled(ps, lift_momentum_observable(ps, ps.xi[a]).form, Q.H);

    for (int a = 0; a < dim; ++a) {
        Expr e = ps.zero();
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                if (sc.at(a, b, c) != 0) e += ps.X(co.eta[b]) * ps.X(co.eta[c]) * (sc.at(a, b, c) / 2);
        row("{eta^" + std::to_string(a + 1) + ",Q}", br(ps.X(co.eta[a]), Q.form), e);
    }
    for (int a = 0; a < dim; ++a) {
        Form e = dH[a];
        for (int dd = 0; dd < dim; ++dd)
            for (int b = 0; b < dim; ++b)
                if (sc.at(dd, a, b) != 0) e += ps.X(co.eta[b]) * mom_form(ps, co.P[dd]) * sc.at(dd, a, b);
        row("{P_" + std::to_string(a + 1) + ",Q}", br(mom_form(ps, co.P[a]), Q.form), e);
    }
    std::vector<std::pair<std::string, Form>> fields;
    for (size_t k = 0; k < co.u.size(); ++k) {
        const std::string& lab = ps.c().gen(co.u[k]).label;
        for (int al = 0; al < n; ++al)
            fields.push_back({lab + " d^{n-1}x_" + std::to_string(al), ps.X(co.u[k]) * ps.v(al)});
        fields.push_back({"p[" + lab + "]", mom_form(ps, co.pu[k])});
    }
    for (auto& [lab, F] : fields) {
        try {
            br.X(F);
        } catch (const NotHamiltonian&) {
            GeneratorRow r{"{" + lab + ",Q} skipped: not Hamiltonian", ps.zero(), ps.zero(), true};
            r.skipped = true;
            rows.push_back(std::move(r));
            continue;
        }
        Form e = ps.zero();
        for (int a = 0; a < dim; ++a) e += br(F, dH[a]) * ps.X(co.eta[a]);
        row("{" + lab + ",Q}", br(F, Q.form), e);
    }
    return rows;
}

// ---------------------------------------------------------------------------

namespace {

long rank_of(std::vector<std::vector<Q>> m) {
    long r = 0;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (size_t c = 0; c < cols && r < (long)rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == (size_t)r || m[i][c] == 0) continue;
            Q f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// basis element: B exponents (by generator), C subset (sorted generator list)
struct KBasis {
    std::vector<int> bexp;
    std::vector<int> cset;
    bool operator<(const KBasis& o) const {
        return std::tie(bexp, cset) < std::tie(o.bexp, o.cset);
    }
};

std::vector<KBasis> slice(int dim, int k, int w, const std::vector<int>& order) {
    std::vector<KBasis> out;
    std::vector<int> cs;
    std::function<void(int)> subsets = [&](int from) {
        if ((int)cs.size() == k) {
            std::vector<int> be(dim, 0);
            std::function<void(int, int)> multis = [&](int pos, int left) {
                if (pos == dim) {
                    if (left == 0) out.push_back({be, cs});
                    return;
                }
                for (int e = 0; e <= left; ++e) {
                    be[order[pos]] = e;
                    multis(pos + 1, left - e);
                }
                be[order[pos]] = 0;
            };
            multis(0, w - k);
            return;
        }
        for (int i = from; i < dim; ++i) {
            cs.push_back(order[i]);
            subsets(i + 1);
            cs.pop_back();
        }
    };
    subsets(0);
    for (auto& b : out) std::sort(b.cset.begin(), b.cset.end());
    return out;
}

}  // namespace

KoszulReport koszul_homology(int dim, int cap, const std::vector<int>& order0) {
    if (dim <= 0) throw Error("Koszul complex needs at least one generator pair");
    if (cap < 0) cap = dim + 1;
    if (cap < dim)
        throw TruncationError("truncation weight " + std::to_string(cap) +
                              " does not reach antighost number " + std::to_string(dim));
    std::vector<int> order = order0;
    if (order.empty())
        for (int i = 0; i < dim; ++i) order.push_back(i);
    {
        auto s = order;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < dim; ++i)
            if ((int)s.size() != dim || s[i] != i) throw Error("order is not a permutation");
    }
    KoszulReport rep;
    rep.dim = dim;
    rep.cap = cap;
    rep.betti.assign(dim + 1, 0);
    rep.table.assign(dim + 1, {});
    for (int w = 0; w <= cap; ++w) {
        // d: K_{k,w} -> K_{k-1,w}
        std::vector<std::vector<KBasis>> K(dim + 1);
        for (int k = 0; k <= dim && k <= w; ++k) K[k] = slice(dim, k, w, order);
        std::vector<long> rk(dim + 2, 0);
        for (int k = 1; k <= dim && k <= w; ++k) {
            std::map<KBasis, size_t> tgt;
            for (size_t i = 0; i < K[k - 1].size(); ++i) tgt[K[k - 1][i]] = i;
            std::vector<std::vector<Q>> M(K[k - 1].size(), std::vector<Q>(K[k].size()));
            for (size_t col = 0; col < K[k].size(); ++col) {
                const KBasis& b = K[k][col];
                for (size_t j = 0; j < b.cset.size(); ++j) {
                    KBasis t = b;
                    t.bexp[b.cset[j]] += 1;
                    t.cset.erase(t.cset.begin() + j);
                    M[tgt.at(t)][col] += (j % 2) ? -1 : 1;
                }
            }
            rk[k] = rank_of(M);
        }
        for (int k = 0; k <= dim; ++k) {
            long dk = (long)K[k].size();
            rep.table[k].push_back({dk, rk[k]});
            rep.betti[k] += dk - rk[k] - rk[k + 1];
        }
    }
    rep.ok = rep.betti[0] == 1;
    for (int k = 1; k <= dim; ++k) rep.ok = rep.ok && rep.betti[k] == 0;
    return rep;
}

int koszul_generator_sign(const Bracket& br) {
    const PhaseSpace& ps = br.ps();
    const auto& co = ps.co;
    if (co.rho.empty() || co.B.empty() || co.C.empty())
        throw BuildError("Koszul generators need multipliers and antighosts");
    Form q = ps.zero();
    for (size_t a = 0; a < co.rho.size(); ++a) q += ps.X(co.rho[a]) * mom_form(ps, co.B[a]);
    int sign = 0;
    for (size_t a = 0; a < co.rho.size(); ++a) {
        Form Ba = mom_form(ps, co.B[a]);
        if (!br(Ba, q).is_zero()) throw Error("{B_a, rho B} is not zero");
        Form r = br(mom_form(ps, co.C[a]), q);
        int s = r == Ba ? 1 : r == -Ba ? -1 : 0;
        if (s == 0 || (sign && s != sign)) throw Error("{C_a, rho B} is not proportional to B_a");
        sign = s;
    }
    return sign;
}

}  // namespace artifact
