#pragma once
// Exterior calculus over a chart: d, interior product, vector fields.

#include <functional>
#include <map>
#include <string>

#include "artifact/kernel.hpp"

namespace artifact {

using Form = Expr;

inline Form wedge(const Form& a, const Form& b) { return a * b; }

// d^n x, d^{n-1}x_a := d_a -| d^n x, d^{n-2}x_{ab} := d_b -| d_a -| d^n x (a, b 0-based).
Form vol(const Chart& c);
Form vol1(const Chart& c, int a);
Form vol2(const Chart& c, int a, int b);

Form d(const Form& a);

// Coordinate partial d/dg acting on coefficients (left derivative).
Expr partial(const Expr& e, int g);
// Interior product of the coordinate field d/dg, left antiderivation of bidegree (-1, |g|).
Form hook_gen(int g, const Form& a);

class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Chart* c) : chart_(c) {}
    static VectorField basis(const Chart& c, int g, const Q& q = 1);

    const Chart* chart() const { return chart_; }
    const std::map<int, Expr>& comps() const { return comps_; }
    const Expr* comp(int g) const {
        auto it = comps_.find(g);
        return it == comps_.end() ? nullptr : &it->second;
    }
    void add(int g, const Expr& coef);
    bool is_zero() const { return comps_.empty(); }

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    VectorField operator*(const Q& q) const;
    // coefficient multiplication from the left
    friend VectorField operator*(const Expr& f, const VectorField& X);
    bool operator==(const VectorField& o) const;
    bool operator!=(const VectorField& o) const { return !(*this == o); }

    int parity() const;  // -1 mixed or zero
    VectorField parity_part(int p) const;

    Expr apply(const Expr& f) const;  // X(f), derivation on coefficients

private:
    const Chart* chart_ = nullptr;
    std::map<int, Expr> comps_;
};

Form hook(const VectorField& X, const Form& a);
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// Printing in the usual notation: coefficient, coordinates, fiber differentials,
// then the base-volume factor (d4x, d3x_m, d2x_mn).
std::string to_string(const Expr& e);
std::string to_string(const VectorField& X);
std::string mono_string(const Chart& c, const Mono& m, Q& coef);

// Substitute coordinates (and their differentials) by expressions.
// Differentials of substituted coordinates are replaced by d of the image.
Expr substitute(const Expr& e, const std::map<int, Expr>& coord_images);

// Keep only terms with at least one fiber differential.
Form drop_semibasic(const Form& a);

}  // namespace artifact
