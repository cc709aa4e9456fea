#include "artifact/runner.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "artifact/brst.hpp"
#include "artifact/fieldeqs.hpp"
#include "artifact/properties.hpp"
#include "artifact/ym.hpp"

namespace artifact {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// theory files

struct Path {
    std::string p;
    Path operator/(const std::string& k) const { return {p + "/" + k}; }
    Path operator/(size_t i) const { return {p + "/" + std::to_string(i)}; }
};

[[noreturn]] void schema_fail(const Path& at, const std::string& msg) {
    throw SchemaError((at.p.empty() ? "/" : at.p) + ": " + msg);
}

void only_keys(const json& j, const Path& at, std::initializer_list<const char*> keys) {
    for (auto& [k, v] : j.items()) {
        bool ok = false;
        for (auto* a : keys) ok |= k == a;
        if (!ok) schema_fail(at / k, "unknown key");
    }
}

const json& need(const json& j, const Path& at, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) schema_fail(at / key, "missing");
    return *it;
}

int as_int(const json& j, const Path& at) {
    if (!j.is_number_integer()) schema_fail(at, "expected an integer");
    return j.get<int>();
}

bool as_bool(const json& j, const Path& at) {
    if (!j.is_boolean()) schema_fail(at, "expected true or false");
    return j.get<bool>();
}

std::string as_string(const json& j, const Path& at) {
    if (!j.is_string()) schema_fail(at, "expected a string");
    return j.get<std::string>();
}

Q as_rational(const json& j, const Path& at) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) {
        Q q;
        if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
            schema_fail(at, "not a rational: " + j.get<std::string>());
        q.canonicalize();
        return q;
    }
    schema_fail(at, "expected an integer or a rational string such as \"1/2\"");
}

std::string line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

StructureConstants parse_lie(const json& j, const Path& at) {
    if (!j.is_object()) schema_fail(at, "expected an object");
    only_keys(j, at, {"builtin", "dim", "constants"});
    if (j.contains("builtin")) {
        std::string b = as_string(j["builtin"], at / "builtin");
        if (b == "su2" || b == "so3" || b == "levi-civita") return levi_civita3();
        if (b == "abelian") return abelian(as_int(need(j, at, "dim"), at / "dim"));
        schema_fail(at / "builtin", "unknown algebra " + b + " (su2, so3, levi-civita, abelian)");
    }
    int dim = as_int(need(j, at, "dim"), at / "dim");
    if (dim < 0) schema_fail(at / "dim", "negative dimension");
    StructureConstants sc(dim);
    if (!j.contains("constants")) return sc;
    const json& cs = j["constants"];
    if (!cs.is_array()) schema_fail(at / "constants", "expected an array of [c, a, b, value]");
    for (size_t i = 0; i < cs.size(); ++i) {
        Path e = at / "constants" / i;
        if (!cs[i].is_array() || cs[i].size() != 4) schema_fail(e, "expected [c, a, b, value]");
        int idx[3];
        for (int k = 0; k < 3; ++k) {
            idx[k] = as_int(cs[i][k], e / (size_t)k);
            if (idx[k] < 1 || idx[k] > dim) schema_fail(e / (size_t)k, "index out of range 1.." + std::to_string(dim));
        }
        sc.at(idx[0] - 1, idx[1] - 1, idx[2] - 1) = as_rational(cs[i][3], e / (size_t)3);
    }
    return sc;
}

void structure_warnings(const StructureConstants& sc, std::vector<std::string>& w) {
    StructureReport r = check_structure_constants(sc);
    for (auto& v : r.antisym_violations) {
        std::ostringstream s;
        s << "structure constants not antisymmetric: C^" << v[0] << "_{" << v[1] << v[2] << "} = "
          << sc.at(v[0] - 1, v[1] - 1, v[2] - 1) << ", C^" << v[0] << "_{" << v[2] << v[1]
          << "} = " << sc.at(v[0] - 1, v[2] - 1, v[1] - 1);
        w.push_back(s.str());
    }
    if (!r.jacobi) {
        auto& v = r.jacobi_violations.front();
        std::ostringstream s;
        s << "structure constants fail the Jacobi identity (" << r.jacobi_violations.size()
          << " components), first at a,b,c,d = " << v[0] << "," << v[1] << "," << v[2] << "," << v[3];
        w.push_back(s.str());
    }
}

// ---------------------------------------------------------------------------
// helpers for the suites

std::string first_term(const Form& f) {
    if (f.is_zero()) return "";
    Form t(f.chart());
    auto& [m, q] = *f.terms().begin();
    t.add_term(m, q);
    return to_string(t);
}

void add(Report& r, std::string name, bool pass, std::string detail = "", std::string off = "") {
    r.checks.push_back({std::move(name), pass, std::move(detail), pass ? "" : std::move(off)});
}

const Theory& need_theory(const RunConfig& cfg, const Theory* t) {
    if (!t) throw SchemaError(cfg.subcommand + " needs --input");
    return *t;
}

SolveOptions solve_opts(const RunConfig& cfg) {
    SolveOptions o;
    o.degree_cap = cfg.degree_cap;
    return o;
}

BrstCharge charge_for(const PhaseSpace& ps) {
    ChargeKind kind = ps.co.rho.empty() ? ChargeKind::Minimal : ChargeKind::Extended;
    const Expr* H = ps.H && ps.co.p >= 0 ? &*ps.H : nullptr;
    return build_brst_charge(ps, kind, H);
}

Form operand(const PhaseSpace& ps, const std::string& text, const char* flag) {
    if (text.empty()) throw SchemaError(std::string("missing --") + flag);
    if (text == "upsilon") return charge_for(ps).form;
    try {
        return parse_expr(ps.c(), text);
    } catch (const ParseError& e) {
        throw SchemaError(std::string("--") + flag + ": " + e.what());
    }
}

void run_build(const RunConfig&, const Theory& t, Report& r) {
    PhaseSpace ps = build_phase_space(t.spec);
    r.data["variant"] = variant_name(ps.variant);
    r.data["generators"] = ps.c().size();
    r.data["theta"] = to_string(ps.theta);
    r.data["omega"] = to_string(ps.omega);
    if (ps.H) r.data["hamiltonian"] = to_string(*ps.H);
    Form diff = ps.omega + d(ps.theta);
    add(r, "omega = -d theta", diff.is_zero(), "", first_term(diff));
    Form dom = d(ps.omega);
    add(r, "d omega = 0", dom.is_zero(), "", first_term(dom));
    if (ps.variant == Variant::LagrangeDAlembert)
        r.data["theta_canonical"] = to_string(ps.theta_canonical);
    for (size_t a = 0; a < ps.xi.size(); ++a) {
        NoetherCurrent J = lift_momentum_observable(ps, ps.xi[a], (int)a + 1);
        r.data["currents"].push_back(to_string(J.form));
    }
}

void run_bracket(const RunConfig& cfg, const Theory& t, Report& r) {
    PhaseSpace ps = build_phase_space(t.spec);
    Bracket br(ps, ps.omega, solve_opts(cfg));
    Form F = operand(ps, cfg.F, "F"), G = operand(ps, cfg.G, "G");
    try {
        Form v = br(F, G);
        r.data["bracket"] = to_string(v);
        add(r, "{F,G} computed", true, to_string(v));
        if (!cfg.expect.empty()) {
            Form e = operand(ps, cfg.expect, "expect");
            Form diff = v - e;
            add(r, "{F,G} = expected", diff.is_zero(), to_string(e), first_term(diff));
        }
    } catch (const NotHamiltonian& e) {
        add(r, "{F,G} computed", false, e.what(), to_string(e.witness));
    }
}

void run_structural(const RunConfig& cfg, const Theory& t, Report& r) {
    PhaseSpace ps = build_phase_space(t.spec);
    Form F = operand(ps, cfg.F, "F");
    std::string expect = cfg.expect.empty() ? "hamiltonian" : cfg.expect;
    if (expect != "hamiltonian" && expect != "obstruction")
        throw SchemaError("--expect must be hamiltonian or obstruction for structural");
    SolveResult s = solve_structural(ps, F, solve_opts(cfg));
    r.data["F"] = to_string(F);
    r.data["hamiltonian"] = s.hamiltonian;
    r.data["unknowns"] = s.unknowns;
    if (s.hamiltonian) {
        r.data["X"] = to_string(s.X);
        r.data["kernel_dim"] = s.kernel_dim;
        Form res = hook(s.X, ps.omega) - d(F);
        if (ps.vertical()) res = drop_semibasic(res);
        add(r, "X -| Omega = dF", res.is_zero(), to_string(s.X), first_term(res));
    } else {
        r.data["witness"] = s.witness_text;
    }
    bool want = expect == "hamiltonian";
    add(r, "expect " + expect, s.hamiltonian == want,
        s.hamiltonian ? "solution found" : "obstruction " + s.witness_text, s.witness_text);
}

void run_nilpotency(const RunConfig& cfg, const Theory& t, Report& r) {
    PhaseSpace ps = build_phase_space(t.spec);
    if (ps.xi.empty()) throw SchemaError("nilpotency needs a Lie algebra and a generator action");
    StructureReport sr = check_structure_constants(t.spec.lie);
    add(r, "Jacobi identity", sr.jacobi);
    bool extended = !ps.co.rho.empty();
    VectorField V = build_brst_vector_field(ps, extended, false);
    VectorField VV = lie_bracket(V, V);
    add(r, "[V,V] = 0", VV.is_zero(), "", VV.is_zero() ? "" : to_string(VV));
    // with a Hamiltonian the bracket lives on Omega_H
    auto omega_for = [](const PhaseSpace& s) {
        return s.H && s.co.p >= 0 ? pull_back_section(s, *s.H) : s.omega;
    };
    Bracket br(ps, omega_for(ps), solve_opts(cfg));
    BrstCharge Q = charge_for(ps);
    r.data["upsilon"] = to_string(Q.form);
    try {
        NilpotencyReport nr = check_nilpotency(br, Q);
        add(r, "{Upsilon,Upsilon} = 0", nr.is_zero, "", first_term(nr.value));
        for (auto& e : nr.ledger)
            r.data["ledger"].push_back({{"group", e.group}, {"pair", e.pair}, {"value", to_string(e.value)}});
        // the generator table belongs to the minimal charge on the graded space
        TheorySpec gspec = t.spec;
        gspec.multipliers = gspec.antighosts = false;
        PhaseSpace gs = ps.co.rho.empty() ? ps : build_phase_space(gspec, Variant::Graded);
        Bracket gbr(gs, omega_for(gs), solve_opts(cfg));
        BrstCharge gq = ps.co.rho.empty() ? Q : charge_for(gs);
        for (auto& row : reduction_generator_actions(gbr, gq)) {
            std::string detail = row.skipped ? "" : to_string(row.computed);
            add(r, "generator " + row.label, row.ok || row.skipped, detail,
                first_term(row.computed - row.expected));
        }
    } catch (const NotHamiltonian& e) {
        add(r, "{Upsilon,Upsilon} = 0", false, e.what(), to_string(e.witness));
    }
}

void equation_rows(const EquationSet& es, Report& r) {
    for (auto& e : es.eqs) {
        json row = {{"label", e.label}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}};
        if (!e.current.empty()) {
            for (auto& j : e.current) row["current"].push_back(to_string(j));
            add(r, e.label, true, "conservation law, D_al J^al = " + to_string(e.rhs));
        } else {
            Expr diff = e.contraction - (e.lhs - e.rhs) * e.scale;
            add(r, e.label, diff.is_zero(), to_string(e.lhs) + " = " + to_string(e.rhs), first_term(diff));
        }
        r.data["equations"].push_back(row);
    }
}

void run_eom(const RunConfig&, const Theory& t, Report& r) {
    PhaseSpace ps = build_phase_space(t.spec);
    if (!ps.H) throw SchemaError("eom needs a hamiltonian");
    if (ps.variant == Variant::LagrangeDAlembert) throw SchemaError("use lda for the lagrange-dalembert variant");
    equation_rows(derive_hamilton_equations(ps, *ps.H), r);
}

void run_lda(const RunConfig&, const Theory& t, Report& r) {
    PhaseSpace ps = build_phase_space(t.spec, Variant::LagrangeDAlembert);
    if (!ps.H) throw SchemaError("lda needs a hamiltonian");
    equation_rows(derive_lda_equations(ps, *ps.H), r);
}

void run_koszul(const RunConfig& cfg, Report& r) {
    if (cfg.dim < 1) throw SchemaError("--dim must be positive");
    KoszulReport k = koszul_homology(cfg.dim, cfg.truncation_cap);
    r.data["dim"] = k.dim;
    r.data["cap"] = k.cap;
    r.data["betti"] = k.betti;
    std::string b;
    for (long v : k.betti) b += (b.empty() ? "[" : ",") + std::to_string(v);
    b += "]";
    add(r, "betti = [1,0,...,0]", k.ok, b, b);
}

void run_ym(const RunConfig& cfg, const Theory* t, Report& r) {
    YmOptions o;
    if (t) o.f = t->spec.lie;
    YmReport y = yang_mills_suite(o);
    r.data["dim"] = y.dim;
    for (auto& c : y.checks) {
        add(r, c.id, c.pass, c.title, c.mismatch);
        json row = {{"id", c.id}, {"rows", c.lines}};
        if (!c.note.empty()) row["note"] = c.note;
        r.data["tables"].push_back(row);
    }
    std::string dir = golden_dir(cfg.golden_dir);
    if (cfg.write_goldens) write_goldens(y, dir);
    for (auto& g : compare_goldens(y, dir))
        add(r, "golden " + g.id, g.present && g.match, g.present ? "" : "missing golden file",
            g.first_diff);
}

void run_properties(const RunConfig& cfg, Report& r) {
    if (cfg.count < 1) throw SchemaError("--count must be positive");
    PropertyOptions o;
    o.seed = cfg.seed;
    o.count = cfg.count;
    for (auto& p : run_property_suite(o))
        add(r, p.law, p.failures == 0,
            std::to_string(p.instances) + " instances, " + std::to_string(p.failures) + " failures",
            p.first_failure);
}

}  // namespace

// ---------------------------------------------------------------------------

bool builtin_theory(const std::string& name, Theory& out) {
    out = Theory{};
    out.source = name;
    if (name == "yang-mills") {
        out.spec = yang_mills_spec(levi_civita3(), Variant::Vertical, true);
        out.spec.name = name;
        return true;
    }
    if (name == "su2") {
        TheorySpec s;
        s.name = name;
        s.n = 3;
        s.fields = {FieldFamily{"u", "p", {3}, 1}};
        s.lie = levi_civita3();
        s.action.kind = "adjoint";
        s.variant = Variant::GradedExtended;
        s.hamiltonian = "u[1]^2 + u[2]^2 + u[3]^2 + p[1,0]^2 + p[2,0]^2 + p[3,0]^2";
        out.spec = s;
        return true;
    }
    return false;
}

Theory parse_theory_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw SchemaError(origin + ": " + line_col(text, e.byte) + ": " +
                          (pos == std::string::npos ? what : what.substr(pos)));
    }
    Theory t;
    t.source = origin;
    try {
        Path root{""};
        if (!j.is_object()) schema_fail(root, "expected an object");
        only_keys(j, root, {"schema", "name", "n", "variant", "fields", "lie", "action", "extensions", "hamiltonian"});
        if (as_string(need(j, root, "schema"), root / "schema") != "artifact-theory/1")
            schema_fail(root / "schema", "unsupported schema, expected artifact-theory/1");
        TheorySpec& s = t.spec;
        if (j.contains("name")) s.name = as_string(j["name"], root / "name");
        s.n = as_int(need(j, root, "n"), root / "n");
        if (s.n < 1) schema_fail(root / "n", "must be positive");
        s.fields.clear();
        if (j.contains("fields")) {
            const json& fs = j["fields"];
            if (!fs.is_array()) schema_fail(root / "fields", "expected an array");
            for (size_t i = 0; i < fs.size(); ++i) {
                Path at = root / "fields" / i;
                if (!fs[i].is_object()) schema_fail(at, "expected an object");
                only_keys(fs[i], at, {"name", "momentum", "ranges", "internal"});
                FieldFamily f;
                f.name = as_string(need(fs[i], at, "name"), at / "name");
                f.momentum = as_string(need(fs[i], at, "momentum"), at / "momentum");
                const json& rg = need(fs[i], at, "ranges");
                if (!rg.is_array() || rg.empty()) schema_fail(at / "ranges", "expected a non-empty array");
                f.ranges.clear();
                for (size_t k = 0; k < rg.size(); ++k) {
                    int v = as_int(rg[k], at / "ranges" / k);
                    if (v < 1) schema_fail(at / "ranges" / k, "range must be positive");
                    f.ranges.push_back(v);
                }
                f.n_internal = fs[i].contains("internal") ? as_int(fs[i]["internal"], at / "internal")
                                                          : (int)f.ranges.size();
                if (f.n_internal < 0 || f.n_internal > (int)f.ranges.size())
                    schema_fail(at / "internal", "must lie between 0 and the number of ranges");
                for (size_t k = f.n_internal; k < f.ranges.size(); ++k)
                    if (f.ranges[k] != s.n) schema_fail(at / "ranges" / k, "spacetime range must equal n");
                s.fields.push_back(f);
            }
        }
        if (j.contains("lie")) {
            s.lie = parse_lie(j["lie"], root / "lie");
            structure_warnings(s.lie, t.warnings);
        }
        if (j.contains("action")) {
            Path at = root / "action";
            const json& a = j["action"];
            if (!a.is_object()) schema_fail(at, "expected an object");
            only_keys(a, at, {"kind", "components", "base_components"});
            s.action.kind = as_string(need(a, at, "kind"), at / "kind");
            static const char* kinds[] = {"none", "adjoint", "translation", "opaque", "explicit"};
            bool ok = false;
            for (auto* k : kinds) ok |= s.action.kind == k;
            if (!ok) schema_fail(at / "kind", "unknown action kind " + s.action.kind);
            if (a.contains("base_components"))
                s.action.base_components = as_bool(a["base_components"], at / "base_components");
            if (a.contains("components")) {
                const json& cs = a["components"];
                if (!cs.is_array()) schema_fail(at / "components", "expected one array per generator");
                for (size_t i = 0; i < cs.size(); ++i) {
                    Path ai = at / "components" / i;
                    if (!cs[i].is_array()) schema_fail(ai, "expected an array of [generator, expression]");
                    std::vector<std::pair<std::string, std::string>> row;
                    for (size_t k = 0; k < cs[i].size(); ++k) {
                        const json& p = cs[i][k];
                        if (!p.is_array() || p.size() != 2)
                            schema_fail(ai / k, "expected [generator, expression]");
                        row.push_back({as_string(p[0], ai / k / (size_t)0), as_string(p[1], ai / k / (size_t)1)});
                    }
                    s.action.components.push_back(row);
                }
            }
            if (s.action.kind == "explicit" && (int)s.action.components.size() != s.lie.dim)
                schema_fail(at / "components", "explicit action needs one entry per algebra generator");
        }
        if (j.contains("extensions")) {
            Path at = root / "extensions";
            const json& e = j["extensions"];
            if (!e.is_object()) schema_fail(at, "expected an object");
            only_keys(e, at, {"multipliers", "ghosts", "antighosts"});
            if (e.contains("multipliers")) s.multipliers = as_bool(e["multipliers"], at / "multipliers");
            if (e.contains("ghosts")) s.ghosts = as_bool(e["ghosts"], at / "ghosts");
            if (e.contains("antighosts")) s.antighosts = as_bool(e["antighosts"], at / "antighosts");
        }
        if (j.contains("variant")) {
            if (!variant_from_name(as_string(j["variant"], root / "variant"), s.variant))
                schema_fail(root / "variant", "unknown variant " + j["variant"].get<std::string>());
        } else if (s.multipliers && s.ghosts && s.antighosts) {
            s.variant = Variant::GradedExtended;
        } else if (s.ghosts && !s.multipliers && !s.antighosts) {
            s.variant = Variant::Graded;
        } else if (s.multipliers && !s.ghosts && !s.antighosts) {
            s.variant = Variant::MultiplierExtended;
        } else if (!s.multipliers && !s.ghosts && !s.antighosts) {
            s.variant = Variant::Plain;
        } else {
            schema_fail(root / "extensions", "this combination needs an explicit variant");
        }
        if (j.contains("hamiltonian")) s.hamiltonian = as_string(j["hamiltonian"], root / "hamiltonian");
    } catch (const SchemaError& e) {
        throw SchemaError(origin + ": " + e.what());
    }
    // build once so chart-level problems (bad generator references, parse errors in
    // the Hamiltonian or action) surface at load time
    try {
        build_phase_space(t.spec);
    } catch (const ParseError& e) {
        throw SchemaError(origin + ": " + e.what());
    } catch (const BuildError& e) {
        throw SchemaError(origin + ": " + e.what());
    }
    return t;
}

Theory parse_theory_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_theory_text(ss.str(), path);
}

Theory load_theory(const std::string& input) {
    if (std::filesystem::is_regular_file(input)) return parse_theory_file(input);
    Theory t;
    if (builtin_theory(input, t)) return t;
    throw SchemaError(input + ": no such file or built-in theory (yang-mills, su2)");
}

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> s = {"build", "bracket", "structural", "nilpotency", "eom",
                                               "lda", "koszul", "ym-suite", "property-suite"};
    return s;
}

Report run(const RunConfig& cfg, const Theory* theory) {
    Report r;
    r.subcommand = cfg.subcommand;
    r.input = theory ? theory->source : cfg.input;
    r.seed = cfg.seed;
    if (theory) r.warnings = theory->warnings;
    try {
        const std::string& s = cfg.subcommand;
        if (s == "build") run_build(cfg, need_theory(cfg, theory), r);
        else if (s == "bracket") run_bracket(cfg, need_theory(cfg, theory), r);
        else if (s == "structural") run_structural(cfg, need_theory(cfg, theory), r);
        else if (s == "nilpotency") run_nilpotency(cfg, need_theory(cfg, theory), r);
        else if (s == "eom") run_eom(cfg, need_theory(cfg, theory), r);
        else if (s == "lda") run_lda(cfg, need_theory(cfg, theory), r);
        else if (s == "koszul") run_koszul(cfg, r);
        else if (s == "ym-suite") run_ym(cfg, theory, r);
        else if (s == "property-suite") run_properties(cfg, r);
        else throw SchemaError("unknown subcommand " + s);
        r.status = kPass;
        for (auto& c : r.checks)
            if (!c.pass) r.status = kCheckFailed;
    } catch (const CapExceeded& e) {
        r.status = kCapExceeded;
        r.error = e.what();
    } catch (const TruncationError& e) {
        r.status = kCapExceeded;
        r.error = e.what();
    } catch (const SchemaError& e) {
        r.status = kInputError;
        r.error = e.what();
    } catch (const ParseError& e) {
        r.status = kInputError;
        r.error = e.what();
    } catch (const BuildError& e) {
        r.status = kInputError;
        r.error = e.what();
    } catch (const std::exception& e) {
        r.status = kInternal;
        r.error = std::string("internal error: ") + e.what();
    }
    return r;
}

json report_to_json(const Report& r) {
    json j;
    j["schema"] = "artifact-report/1";
    j["subcommand"] = r.subcommand;
    j["input"] = r.input;
    j["seed"] = r.seed;
    j["status"] = r.status;
    j["passed"] = r.passed();
    j["warnings"] = r.warnings;
    if (!r.error.empty()) j["error"] = r.error;
    j["checks"] = json::array();
    for (auto& c : r.checks) {
        json row = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        if (!c.offending.empty()) row["offending"] = c.offending;
        j["checks"].push_back(row);
    }
    j["data"] = r.data;
    return j;
}

std::string report_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string report_text(const Report& r) {
    std::ostringstream o;
    o << r.subcommand;
    if (!r.input.empty()) o << " " << r.input;
    o << "\n";
    for (auto& w : r.warnings) o << "warning: " << w << "\n";
    int passed = 0;
    for (auto& c : r.checks) {
        passed += c.pass;
        o << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) o << "  " << c.detail;
        o << "\n";
        if (!c.pass && !c.offending.empty()) o << "     offending: " << c.offending << "\n";
    }
    if (!r.error.empty()) o << "error: " << r.error << "\n";
    o << passed << "/" << r.checks.size() << " checks passed, exit " << r.status << "\n";
    return o.str();
}

}  // namespace artifact
