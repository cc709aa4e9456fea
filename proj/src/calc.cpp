#include "artifact/calc.hpp"

#include <sstream>

namespace artifact {

namespace {

Expr mono_expr(const Chart& c, const Mono& m) {
    Expr e(&c);
    e.add_term(m, 1);
    return e;
}

// Apply a derivation of bidegree (kD, pD) given its values on single factors.
template <class F>
Expr derive(const Expr& e, int kD, int pD, F&& image) {
    const Chart* cp = e.chart();
    Expr out(cp);
    if (!cp) return out;
    const Chart& c = *cp;
    std::vector<uint32_t> flat;
    for (auto& [m, q] : e.terms()) {
        flat.clear();
        for (auto& f : m)
            for (uint32_t t = 0; t < f.exp; ++t) flat.push_back(f.key);
        int sg = 0;
        for (size_t i = 0; i < flat.size(); ++i) {
            Expr img = image(flat[i]);
            if (!img.is_zero()) {
                Mono pre, post;
                for (size_t t = 0; t < i; ++t) {
                    if (!pre.empty() && pre.back().key == flat[t]) pre.back().exp++;
                    else pre.push_back({flat[t], 1});
                }
                for (size_t t = i + 1; t < flat.size(); ++t) {
                    if (!post.empty() && post.back().key == flat[t]) post.back().exp++;
                    else post.push_back({flat[t], 1});
                }
                Expr term = mono_expr(c, pre) * img * mono_expr(c, post);
                term *= (sg & 1) ? Q(-q) : q;
                out += term;
            }
            sg += kD * c.kdeg(flat[i]) + pD * c.pdeg(flat[i]);
        }
    }
    return out;
}

Expr fn_partial(const Chart& c, int fn, int g) {
    if (!c.depends(fn, g)) return Expr(&c);
    const Expr* p = c.partial(fn, g);
    if (!p)
        throw UnregisteredDerivative("no registered partial of " + c.gen(fn).label + " by " +
                                     c.gen(g).label);
    return *p;
}

}  // namespace

Form vol(const Chart& c) {
    Expr r(&c, 1);
    for (int id : c.base()) r = r * Expr::diff(c, id);
    return r;
}

Form vol1(const Chart& c, int a) { return hook_gen(c.base().at(a), vol(c)); }

Form vol2(const Chart& c, int a, int b) {
    return hook_gen(c.base().at(b), hook_gen(c.base().at(a), vol(c)));
}

Form d(const Form& a) {
    if (!a.chart()) return Expr();
    const Chart& c = *a.chart();
    return derive(a, 1, 0, [&](uint32_t key) -> Expr {
        if (fcat(key) > 0) return Expr(&c);
        int id = c.id_of_key(key);
        const Gen& g = c.gen(id);
        if (g.role == Role::Function) {
            Expr r(&c);
            for (int dep : g.deps) r += fn_partial(c, id, dep) * Expr::diff(c, dep);
            return r;
        }
        if (g.role == Role::Param) return Expr(&c);
        return Expr::diff(c, id);
    });
}

Expr partial(const Expr& e, int g) {
    if (!e.chart()) return Expr();
    const Chart& c = *e.chart();
    int pg = c.gen(g).odd ? 1 : 0;
    return derive(e, 0, pg, [&](uint32_t key) -> Expr {
        if (fcat(key) > 0) return Expr(&c);
        int id = c.id_of_key(key);
        if (id == g) return Expr(&c, 1);
        if (c.gen(id).role == Role::Function) return fn_partial(c, id, g);
        return Expr(&c);
    });
}

Form hook_gen(int g, const Form& a) {
    if (!a.chart()) return Expr();
    const Chart& c = *a.chart();
    int pg = c.gen(g).odd ? 1 : 0;
    uint32_t dk = c.diff_key(g);
    return derive(a, 1, pg, [&](uint32_t key) -> Expr {
        return key == dk ? Expr(&c, 1) : Expr(&c);
    });
}

// ---------------------------------------------------------------------------

VectorField VectorField::basis(const Chart& c, int g, const Q& q) {
    VectorField X(&c);
    X.add(g, Expr(&c, q));
    return X;
}

void VectorField::add(int g, const Expr& coef) {
    chart_ = common_chart(chart_, coef.chart());
    if (coef.is_zero()) return;
    auto it = comps_.find(g);
    if (it == comps_.end()) {
        comps_.emplace(g, coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

VectorField& VectorField::operator+=(const VectorField& o) {
    chart_ = common_chart(chart_, o.chart_);
    for (auto& [g, e] : o.comps_) add(g, e);
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    chart_ = common_chart(chart_, o.chart_);
    for (auto& [g, e] : o.comps_) add(g, -e);
    return *this;
}

VectorField VectorField::operator*(const Q& q) const {
    VectorField r(chart_);
    for (auto& [g, e] : comps_) r.add(g, e * q);
    return r;
}

VectorField operator*(const Expr& f, const VectorField& X) {
    VectorField r(common_chart(f.chart(), X.chart()));
    for (auto& [g, e] : X.comps()) r.add(g, f * e);
    return r;
}

bool VectorField::operator==(const VectorField& o) const {
    if (comps_.size() != o.comps_.size()) return false;
    for (auto& [g, e] : comps_) {
        auto it = o.comps_.find(g);
        if (it == o.comps_.end() || it->second != e) return false;
    }
    return true;
}

int VectorField::parity() const {
    int p = -1;
    for (auto& [g, e] : comps_) {
        int pe = e.parity();
        if (pe < 0) return -1;
        int q = (pe + (chart_->gen(g).odd ? 1 : 0)) & 1;
        if (p < 0) p = q;
        else if (p != q) return -1;
    }
    return p;
}

VectorField VectorField::parity_part(int p) const {
    VectorField r(chart_);
    for (auto& [g, e] : comps_) {
        int shift = chart_->gen(g).odd ? 1 : 0;
        r.add(g, e.parity_part((p + shift) & 1));
    }
    return r;
}

Expr VectorField::apply(const Expr& f) const {
    Expr r(common_chart(chart_, f.chart()));
    for (auto& [g, e] : comps_) r += e * partial(f, g);
    return r;
}

Form hook(const VectorField& X, const Form& a) {
    if (!a.is_zero() && a.max_form_degree() == 0)
        throw DegreeError("interior product of a degree-0 form");
    Expr r(common_chart(X.chart(), a.chart()));
    for (auto& [g, e] : X.comps()) r += e * hook_gen(g, a);
    return r;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    const Chart* c = common_chart(X.chart(), Y.chart());
    VectorField r(c);
    if (!c) return r;
    for (int px = 0; px < 2; ++px)
        for (int py = 0; py < 2; ++py) {
            VectorField Xp = X.parity_part(px), Yp = Y.parity_part(py);
            if (Xp.is_zero() || Yp.is_zero()) continue;
            Q s = (px * py) ? -1 : 1;
            for (auto& [g, e] : Yp.comps()) r.add(g, Xp.apply(e));
            for (auto& [g, e] : Xp.comps()) r.add(g, Yp.apply(e) * (-s));
        }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string qstr(const Q& q) { return q.get_str(); }

std::string pow_str(const std::string& s, uint32_t e) {
    return e == 1 ? s : s + "**" + std::to_string(e);
}

}  // namespace

std::string mono_string(const Chart& c, const Mono& m, Q& coef) {
    std::vector<std::string> parts;
    std::vector<int> bases;  // base indices of dx factors
    std::vector<std::string> fiber;
    for (auto& f : m) {
        const Gen& g = c.gen_of_key(f.key);
        switch (fcat(f.key)) {
            case 0: parts.push_back(pow_str(g.label, f.exp)); break;
            case 1: fiber.push_back(pow_str("d" + g.label, f.exp)); break;
            default: bases.push_back(g.indices.empty() ? 0 : g.indices[0]); break;
        }
    }
    int n = c.n();
    std::string vol_s;
    int nb = (int)bases.size();
    if (nb == 0) {
    } else if (nb == n) {
        vol_s = "d" + std::to_string(n) + "x";
    } else if (nb == n - 1 && n >= 1) {
        int miss = 0;
        while (miss < nb && bases[miss] == miss) ++miss;
        if (miss & 1) coef = -coef;
        vol_s = "d" + std::to_string(n - 1) + "x_" + std::to_string(miss);
    } else if (nb == n - 2 && n >= 2) {
        std::vector<int> missing;
        for (int a = 0, j = 0; a < n; ++a) {
            if (j < nb && bases[j] == a) ++j;
            else missing.push_back(a);
        }
        int a = missing[0], b = missing[1];
        if (((a + b - 1) % 2 + 2) % 2 == 1) coef = -coef;
        vol_s = "d" + std::to_string(n - 2) + "x_" + std::to_string(a) + std::to_string(b);
    } else {
        for (int a : bases) fiber.push_back("dx^" + std::to_string(a));
    }
    if (!vol_s.empty()) fiber.push_back(vol_s);
    std::string s;
    for (auto& p : parts) s += (s.empty() ? "" : " ") + p;
    if (!fiber.empty()) {
        std::string w;
        for (auto& f : fiber) w += (w.empty() ? "" : " ∧ ") + f;
        s += (s.empty() ? "" : " ") + w;
    }
    return s;
}

std::string to_string(const Expr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, q0] : e.terms()) {
        Q q = q0;
        std::string body = mono_string(*e.chart(), m, q);
        bool neg = q < 0;
        Q a = neg ? Q(-q) : q;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (body.empty()) os << qstr(a);
        else if (a == 1) os << body;
        else os << qstr(a) << " " << body;
    }
    return os.str();
}

std::string to_string(const VectorField& X) {
    if (X.is_zero()) return "0";
    std::vector<std::pair<int, int>> order;
    for (auto& [g, e] : X.comps()) order.push_back({X.chart()->gen(g).rank, g});
    std::sort(order.begin(), order.end());
    std::string s;
    for (auto& [r, g] : order) {
        std::string c = to_string(*X.comp(g));
        if (!s.empty()) s += " + ";
        s += "(" + c + ") d/d" + X.chart()->gen(g).label;
    }
    return s;
}

Expr substitute(const Expr& e, const std::map<int, Expr>& images) {
    if (!e.chart()) return e;
    const Chart& c = *e.chart();
    std::map<uint32_t, Expr> cache;
    auto img = [&](uint32_t key) -> Expr {
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        int id = c.id_of_key(key);
        Expr r(&c);
        auto jt = images.find(id);
        if (jt == images.end()) {
            r = fcat(key) ? Expr::diff(c, id) : Expr::coord(c, id);
        } else {
            r = fcat(key) ? d(jt->second) : jt->second;
        }
        cache.emplace(key, r);
        return r;
    };
    Expr out(&c);
    for (auto& [m, q] : e.terms()) {
        Expr t(&c, q);
        for (auto& f : m) {
            Expr x = img(f.key);
            for (uint32_t k = 0; k < f.exp; ++k) t = t * x;
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

Form drop_semibasic(const Form& a) {
    Expr r(a.chart());
    for (auto& [m, q] : a.terms())
        if (!mono_semibasic(m)) r.add_term(m, q);
    return r;
}

}  // namespace artifact
