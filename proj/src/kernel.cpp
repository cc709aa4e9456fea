#include "artifact/kernel.hpp"

#include <algorithm>
#include <tuple>

namespace artifact {

namespace {
const char* kRoleNames[] = {"base",  "field",       "multiplier",  "ghost",    "antighost",
                            "field-momentum", "multiplier-momentum", "ghost-momentum",
                            "antighost-momentum", "affine", "function", "jet", "param"};
}

const char* role_name(Role r) { return kRoleNames[(int)r]; }

bool role_from_name(const std::string& s, Role& out) {
    for (int i = 0; i <= (int)Role::Param; ++i)
        if (s == kRoleNames[i]) {
            out = (Role)i;
            return true;
        }
    return false;
}

bool role_is_odd(Role r) {
    // ghost-sector momenta are odd as well, so that the charge is odd and theta even
    return r == Role::Ghost || r == Role::Antighost || r == Role::GhostMom ||
           r == Role::AntighostMom;
}

int Chart::add(const std::string& name, std::vector<int> indices, Role role,
               const std::string& label, int odd) {
    if (frozen_) throw Error("chart is frozen; cannot register " + name);
    auto key = std::make_pair(name, indices);
    if (index_.count(key)) throw Error("duplicate generator " + name);
    Gen g;
    g.name = name;
    g.indices = std::move(indices);
    g.role = role;
    g.odd = odd < 0 ? role_is_odd(role) : odd == 1;
    if (label.empty()) {
        g.label = name;
        for (size_t i = 0; i < g.indices.size(); ++i)
            g.label += (i ? "," : "_") + std::to_string(g.indices[i]);
    } else {
        g.label = label;
    }
    int id = (int)gens_.size();
    gens_.push_back(std::move(g));
    index_[key] = id;
    if (role == Role::Base) base_.push_back(id);
    return id;
}

int Chart::add_function(const std::string& name, std::vector<int> indices,
                        std::vector<int> deps, const std::string& label, bool odd) {
    int id = add(name, std::move(indices), Role::Function, label, odd ? 1 : 0);
    gens_[id].deps = std::move(deps);
    functions_.push_back(id);
    return id;
}

void Chart::freeze() {
    if (frozen_) return;
    std::vector<int> order(gens_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Gen& x = gens_[a];
        const Gen& y = gens_[b];
        return std::tie(x.role, x.name, x.indices) < std::tie(y.role, y.name, y.indices);
    });
    by_rank_ = order;
    for (size_t r = 0; r < order.size(); ++r) gens_[order[r]].rank = (int)r;
    std::sort(base_.begin(), base_.end(),
              [&](int a, int b) { return gens_[a].indices < gens_[b].indices; });
    frozen_ = true;
}

int Chart::find(const std::string& name, const std::vector<int>& indices) const {
    auto it = index_.find(std::make_pair(name, indices));
    return it == index_.end() ? -1 : it->second;
}

int Chart::require(const std::string& name, const std::vector<int>& indices) const {
    int id = find(name, indices);
    if (id < 0) {
        std::string s = name;
        for (int i : indices) s += " " + std::to_string(i);
        throw Error("unknown generator: " + s);
    }
    return id;
}

void Chart::set_partial(int fn, int wrt, const Expr& e) {
    partials_[{fn, wrt}] = std::make_shared<Expr>(e);
}

const Expr* Chart::partial(int fn, int wrt) const {
    auto it = partials_.find({fn, wrt});
    return it == partials_.end() ? nullptr : it->second.get();
}

bool Chart::depends(int fn, int wrt) const {
    const auto& d = gens_[fn].deps;
    return std::find(d.begin(), d.end(), wrt) != d.end();
}

// ---------------------------------------------------------------------------

int mono_kdeg(const Chart&, const Mono& m) {
    int k = 0;
    for (auto& f : m)
        if (fcat(f.key) > 0) k += (int)f.exp;
    return k;
}

int mono_parity(const Chart& c, const Mono& m) {
    int p = 0;
    for (auto& f : m) p += c.pdeg(f.key) * (int)f.exp;
    return p & 1;
}

int mono_total_degree(const Mono& m) {
    int d = 0;
    for (auto& f : m) d += (int)f.exp;
    return d;
}

bool mono_semibasic(const Mono& m) {
    for (auto& f : m)
        if (fcat(f.key) == 1) return false;
    return true;
}

Mono mono_coord_part(const Mono& m) {
    Mono r;
    for (auto& f : m)
        if (fcat(f.key) == 0) r.push_back(f);
    return r;
}

Mono mono_diff_part(const Mono& m) {
    Mono r;
    for (auto& f : m)
        if (fcat(f.key) > 0) r.push_back(f);
    return r;
}

int mono_mul(const Chart& c, const Mono& a, const Mono& b, Mono& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    // suffix sums of (k, p) weights over a
    size_t na = a.size();
    std::vector<int> sk(na + 1, 0), sp(na + 1, 0);
    for (size_t i = na; i-- > 0;) {
        sk[i] = sk[i + 1] + c.kdeg(a[i].key) * (int)a[i].exp;
        sp[i] = sp[i + 1] + c.pdeg(a[i].key) * (int)a[i].exp;
    }
    int sgn = 0;
    size_t i = 0;
    for (const Factor& f : b) {
        while (i < na && a[i].key < f.key) out.push_back(a[i++]);
        int kb = c.kdeg(f.key), pb = c.pdeg(f.key);
        if (i < na && a[i].key == f.key) {
            if (c.nilpotent_key(f.key)) return 0;
            sgn += (int)f.exp * (kb * sk[i + 1] + pb * sp[i + 1]);
            out.push_back({f.key, a[i].exp + f.exp});
            ++i;
        } else {
            sgn += (int)f.exp * (kb * sk[i] + pb * sp[i]);
            out.push_back(f);
        }
    }
    while (i < na) out.push_back(a[i++]);
    return (sgn & 1) ? -1 : 1;
}

int mono_div(const Chart& c, const Mono& q, const Mono& w, Mono& out) {
    out.clear();
    size_t j = 0;
    for (const Factor& f : q) {
        if (j < w.size() && w[j].key < f.key) return 0;
        if (j < w.size() && w[j].key == f.key) {
            if (w[j].exp > f.exp) return 0;
            if (f.exp > w[j].exp) out.push_back({f.key, f.exp - w[j].exp});
            ++j;
        } else {
            out.push_back(f);
        }
    }
    if (j != w.size()) return 0;
    Mono chk;
    int s = mono_mul(c, out, w, chk);
    return s;  // out * w = s * q
}

const Chart* common_chart(const Chart* a, const Chart* b) {
    if (!a) return b;
    if (!b || a == b) return a;
    throw ChartMismatch("operands belong to different charts");
}

// ---------------------------------------------------------------------------

Expr::Expr(const Chart* c, const Q& q) : chart_(c) {
    if (q != 0) terms_.emplace(Mono{}, q);
}

Expr Expr::coord(const Chart& c, int id) {
    Expr e(&c);
    e.terms_.emplace(Mono{{c.coord_key(id), 1}}, Q(1));
    return e;
}

Expr Expr::diff(const Chart& c, int id) {
    Expr e(&c);
    e.terms_.emplace(Mono{{c.diff_key(id), 1}}, Q(1));
    return e;
}

void Expr::add_term(const Mono& m, const Q& q) {
    if (q == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, q);
    } else {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

Expr& Expr::operator+=(const Expr& o) {
    chart_ = common_chart(chart_, o.chart_);
    for (auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
}

Expr& Expr::operator-=(const Expr& o) {
    chart_ = common_chart(chart_, o.chart_);
    for (auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
}

Expr& Expr::operator*=(const Q& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= q;
    return *this;
}

Expr Expr::operator-() const {
    Expr r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

Expr operator*(const Expr& a, const Expr& b) {
    const Chart* c = common_chart(a.chart_, b.chart_);
    Expr r(c);
    if (a.is_zero() || b.is_zero()) return r;
    if (!c) {
        // pure constants
        r.add_term(Mono{}, a.terms_.begin()->second * b.terms_.begin()->second);
        return r;
    }
    Mono m;
    for (auto& [ma, qa] : a.terms_)
        for (auto& [mb, qb] : b.terms_) {
            int s = mono_mul(*c, ma, mb, m);
            if (s == 0) continue;
            r.add_term(m, s > 0 ? Q(qa * qb) : Q(-(qa * qb)));
        }
    return r;
}

int Expr::max_form_degree() const {
    int d = -1;
    for (auto& kv : terms_) d = std::max(d, mono_kdeg(*chart_, kv.first));
    return d;
}

int Expr::min_form_degree() const {
    int d = -1;
    for (auto& kv : terms_) {
        int k = mono_kdeg(*chart_, kv.first);
        d = d < 0 ? k : std::min(d, k);
    }
    return d;
}

Expr Expr::degree_part(int k) const {
    Expr r(chart_);
    for (auto& kv : terms_)
        if (mono_kdeg(*chart_, kv.first) == k) r.terms_.insert(kv);
    return r;
}

int Expr::parity() const {
    int p = -1;
    for (auto& kv : terms_) {
        int q = mono_parity(*chart_, kv.first);
        if (p < 0) p = q;
        else if (p != q) return -1;
    }
    return p;
}

Expr Expr::parity_part(int p) const {
    Expr r(chart_);
    for (auto& kv : terms_)
        if (mono_parity(*chart_, kv.first) == p) r.terms_.insert(kv);
    return r;
}

Expr Expr::normalized() const {
    Expr r(chart_);
    for (auto& [m, q] : terms_) {
        if (q == 0) continue;
        Q qq = q;
        qq.canonicalize();
        r.add_term(m, qq);
    }
    return r;
}

Expr product(const Chart& c, const std::vector<RawFactor>& fs, const Q& coef) {
    Expr r(&c, coef);
    for (auto& f : fs) r = r * (f.diff ? Expr::diff(c, f.id) : Expr::coord(c, f.id));
    return r;
}

// ---------------------------------------------------------------------------

StructureReport check_structure_constants(const StructureConstants& sc) {
    StructureReport rep;
    int d = sc.dim;
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b)
                if (sc.at(c, a, b) + sc.at(c, b, a) != 0) {
                    rep.antisymmetry = false;
                    rep.antisym_violations.push_back({c + 1, a + 1, b + 1});
                }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int dd = 0; dd < d; ++dd) {
                    Q s = 0;
                    for (int e = 0; e < d; ++e)
                        s += sc.at(e, a, b) * sc.at(dd, e, c) + sc.at(e, b, c) * sc.at(dd, e, a) +
                             sc.at(e, c, a) * sc.at(dd, e, b);
                    if (s != 0) {
                        rep.jacobi = false;
                        rep.jacobi_violations.push_back({a + 1, b + 1, c + 1, dd + 1});
                    }
                }
    return rep;
}

StructureConstants levi_civita3() {
    StructureConstants sc(3);
    int p[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int i = 0; i < 6; ++i) sc.at(p[i][2], p[i][0], p[i][1]) = i < 3 ? 1 : -1;
    return sc;
}

StructureConstants abelian(int dim) { return StructureConstants(dim); }

}  // namespace artifact
