#pragma once
// Graded-commutative polynomial kernel.
//
// One algebra holds both coordinate functions and their differentials.
// A factor has bidegree (k, p): k = 1 for a differential, p = Grassmann parity
// of the underlying generator.  Swapping two factors costs (-1)^(k1 k2 + p1 p2).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

using Q = mpq_class;

enum class Role : int {
    Base = 0,     // x^alpha
    Field,        // u^i
    Multiplier,   // lambda^a
    Ghost,        // eta^a
    Antighost,    // rho^a
    FieldMom,     // p_i^alpha
    MultMom,      // B_a^alpha
    GhostMom,     // P_a^alpha
    AntighostMom, // C_a^alpha
    Affine,       // p
    Function,     // opaque coefficient function
    Jet,          // formal first jet symbol
    Param,        // even constant symbol
};

const char* role_name(Role r);
bool role_from_name(const std::string& s, Role& out);
bool role_is_odd(Role r);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ChartMismatch : Error {
    using Error::Error;
};
struct UnregisteredDerivative : Error {
    using Error::Error;
};
struct DegreeError : Error {
    using Error::Error;
};

struct Gen {
    std::string name;
    std::vector<int> indices;
    Role role = Role::Field;
    bool odd = false;
    std::string label;      // printed form
    int rank = 0;           // position in the total order, set by freeze()
    std::vector<int> deps;  // Function only
};

class Expr;

// Factor key: category in the top bits, generator rank below.
// category 0 = coordinate, 1 = fiber differential, 2 = base differential.
struct Factor {
    uint32_t key;
    uint32_t exp;
    bool operator==(const Factor& o) const { return key == o.key && exp == o.exp; }
    bool operator<(const Factor& o) const {
        return key != o.key ? key < o.key : exp < o.exp;
    }
};
using Mono = std::vector<Factor>;

inline uint32_t fkey(uint32_t cat, uint32_t rank) { return (cat << 24) | rank; }
inline uint32_t fcat(uint32_t key) { return key >> 24; }
inline uint32_t frank(uint32_t key) { return key & 0xFFFFFFu; }

class Chart {
public:
    explicit Chart(int n) : n_(n) {}
    int n() const { return n_; }

    // Registration is only allowed before freeze().
    // odd: -1 takes the parity from the role
    int add(const std::string& name, std::vector<int> indices, Role role,
            const std::string& label = "", int odd = -1);
    int add_function(const std::string& name, std::vector<int> indices,
                     std::vector<int> deps, const std::string& label = "", bool odd = false);
    const std::vector<int>& functions() const { return functions_; }
    void freeze();
    bool frozen() const { return frozen_; }

    int find(const std::string& name, const std::vector<int>& indices) const;
    int require(const std::string& name, const std::vector<int>& indices) const;
    bool has(const std::string& name, const std::vector<int>& indices) const {
        return find(name, indices) >= 0;
    }
    int size() const { return (int)gens_.size(); }
    const Gen& gen(int id) const { return gens_.at(id); }
    int id_of_rank(int rank) const { return by_rank_.at(rank); }
    const Gen& gen_of_key(uint32_t key) const { return gens_[by_rank_[frank(key)]]; }
    int id_of_key(uint32_t key) const { return by_rank_[frank(key)]; }

    uint32_t coord_key(int id) const { return fkey(0, gens_[id].rank); }
    uint32_t diff_key(int id) const {
        return fkey(gens_[id].role == Role::Base ? 2 : 1, gens_[id].rank);
    }
    // k + p of the factor is odd: it squares to zero.
    bool nilpotent_key(uint32_t key) const {
        return ((fcat(key) > 0 ? 1 : 0) + (gen_of_key(key).odd ? 1 : 0)) % 2 == 1;
    }
    int kdeg(uint32_t key) const { return fcat(key) > 0 ? 1 : 0; }
    int pdeg(uint32_t key) const { return gen_of_key(key).odd ? 1 : 0; }

    // Partial derivative of an opaque function with respect to a generator.
    void set_partial(int fn, int wrt, const Expr& e);
    const Expr* partial(int fn, int wrt) const;
    bool depends(int fn, int wrt) const;

    // Base coordinate ids in index order.
    const std::vector<int>& base() const { return base_; }

private:
    int n_;
    bool frozen_ = false;
    std::vector<Gen> gens_;
    std::vector<int> by_rank_;
    std::vector<int> base_;
    std::vector<int> functions_;
    std::map<std::pair<std::string, std::vector<int>>, int> index_;
    std::map<std::pair<int, int>, std::shared_ptr<Expr>> partials_;
};

using ChartPtr = std::shared_ptr<Chart>;

// Exact rational linear combination of normal-form monomials.
class Expr {
public:
    using Terms = std::map<Mono, Q>;

    Expr() = default;
    explicit Expr(const Chart* c) : chart_(c) {}
    Expr(const Chart* c, const Q& q);

    static Expr coord(const Chart& c, int id);
    static Expr diff(const Chart& c, int id);
    static Expr constant(const Chart& c, const Q& q) { return Expr(&c, q); }

    const Chart* chart() const { return chart_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Insert coefficient for an already-normal monomial.
    void add_term(const Mono& m, const Q& q);

    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    Expr& operator*=(const Q& q);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(Expr a, const Q& q) { return a *= q; }
    friend Expr operator*(const Q& q, Expr a) { return a *= q; }
    Expr operator-() const;
    friend Expr operator*(const Expr& a, const Expr& b);
    bool operator==(const Expr& o) const { return terms_ == o.terms_; }
    bool operator!=(const Expr& o) const { return !(*this == o); }

    // Degree bookkeeping.
    int max_form_degree() const;  // -1 for zero
    int min_form_degree() const;
    bool homogeneous_degree() const { return max_form_degree() == min_form_degree(); }
    Expr degree_part(int k) const;
    // Grassmann parity of every term, -1 when mixed or zero.
    int parity() const;
    Expr parity_part(int p) const;

    // Canonical re-sort of the term map.  Idempotent.
    Expr normalized() const;

private:
    const Chart* chart_ = nullptr;
    Terms terms_;
    friend class ExprAccess;
};

// Monomial helpers.
int mono_kdeg(const Chart& c, const Mono& m);
int mono_parity(const Chart& c, const Mono& m);
int mono_total_degree(const Mono& m);
bool mono_semibasic(const Mono& m);  // every differential factor is a base dx
Mono mono_coord_part(const Mono& m);
Mono mono_diff_part(const Mono& m);
// a*b with sign; returns 0 when the product vanishes.
int mono_mul(const Chart& c, const Mono& a, const Mono& b, Mono& out);
// Exact quotient q/w for coordinate monomials (sign from reordering); 0 if w does not divide.
int mono_div(const Chart& c, const Mono& q, const Mono& w, Mono& out);

const Chart* common_chart(const Chart* a, const Chart* b);

// Raw products: normalize a list of single-generator factors.
struct RawFactor {
    int id;
    bool diff;
};
Expr product(const Chart& c, const std::vector<RawFactor>& fs, const Q& coef = 1);

// Structure constants C^c_{ab}, stored c[(c*dim + a)*dim + b], 0-based.
struct StructureConstants {
    int dim = 0;
    std::vector<Q> c;
    StructureConstants() = default;
    explicit StructureConstants(int d) : dim(d), c((size_t)d * d * d) {}
    Q& at(int up, int a, int b) { return c[((size_t)up * dim + a) * dim + b]; }
    const Q& at(int up, int a, int b) const { return c[((size_t)up * dim + a) * dim + b]; }
};

struct StructureReport {
    bool antisymmetry = true;
    bool jacobi = true;
    std::vector<std::array<int, 3>> antisym_violations;  // (c, a, b), 1-based
    std::vector<std::array<int, 4>> jacobi_violations;   // (a, b, c, d), 1-based
};
StructureReport check_structure_constants(const StructureConstants& sc);

StructureConstants levi_civita3();
StructureConstants abelian(int dim);

}  // namespace artifact
