#pragma once

#include "linfkit/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lk {

// Coordinate chart of a graded manifold, optionally symplectic of degree
// shift(): conjugate pairs satisfy deg q + deg p = shift and {q,p} = 1.
// Variables are ordered by declaration; that order is the canonical
// factor order of monomials.
class Chart {
public:
    struct Partner {
        int var;
        int sign;  // {v, var} = sign
    };

    explicit Chart(int shift = 0) : shift_(shift) {}

    int add(std::string name, int degree, bool momentum = false);
    // Declares {q,p} = 1; then {p,q} = -(-1)^{|q||p|}.
    void pair(int q, int p);

    int shift() const { return shift_; }
    int size() const { return static_cast<int>(vars_.size()); }
    int degree(int v) const { return vars_.at(v).degree; }
    bool odd(int v) const { return vars_.at(v).degree % 2 != 0; }
    const std::string& name(int v) const { return vars_.at(v).name; }
    bool is_momentum(int v) const { return vars_.at(v).momentum; }
    const std::optional<Partner>& partner(int v) const { return vars_.at(v).partner; }
    int var(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;

    bool operator==(const Chart& o) const { return this == &o; }

private:
    struct Var {
        std::string name;
        int degree;
        bool momentum;
        std::optional<Partner> partner;
    };
    int shift_;
    std::vector<Var> vars_;
    std::unordered_map<std::string, int> index_;
};

// Sorted (variable, exponent) list; odd variables have exponent 1.
using Monomial = std::vector<std::pair<int, int>>;

int monomial_degree(const Chart& c, const Monomial& m);
// Number of momentum factors counted with multiplicity.
int momentum_order(const Chart& c, const Monomial& m);

// Reorders a raw factor sequence into canonical order. Returns the Koszul
// sign and the normal form, or nothing when an odd factor repeats.
// Throws std::out_of_range on an unknown variable.
std::optional<std::pair<int, Monomial>> normalize_monomial(const Chart& c, const std::vector<int>& factors);
std::optional<std::pair<int, Monomial>> normalize_monomial(const Chart& c, const std::vector<std::string>& factors);

struct Poly {
    std::map<Monomial, Scalar> terms;

    Poly() = default;
    static Poly constant(const Scalar& s);
    static Poly variable(int v);

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    void add_term(const Monomial& m, const Scalar& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& s);
    bool operator==(const Poly& o) const { return terms == o.terms; }
    Scalar coefficient(const Monomial& m) const;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Scalar& s);
Poly operator-(Poly a);

// Product of monomials with its Koszul sign; sign 0 when it vanishes.
std::pair<int, Monomial> multiply_monomials(const Chart& c, const Monomial& a, const Monomial& b);
Poly mul(const Chart& c, const Poly& a, const Poly& b);
Poly product(const Chart& c, const std::vector<Poly>& factors);

// Graded partial derivatives: the left one moves the variable to the front,
// the right one to the back.
Poly left_derivative(const Chart& c, int v, const Poly& p);
Poly right_derivative(const Chart& c, int v, const Poly& p);

// Canonical Poisson bracket of degree -shift:
// {f,g} = sum_v (f d<_v) {v, partner(v)} (d>_partner g).
Poly bracket(const Chart& c, const Poly& f, const Poly& g);

// Sets every momentum coordinate to zero.
Poly restrict_to_base(const Chart& c, const Poly& p);
bool has_momentum(const Chart& c, const Poly& p);

// Replaces variables by polynomials of the same parity; unlisted variables stay.
Poly substitute(const Chart& c, const Poly& p, const std::map<int, Poly>& images);

std::optional<int> homogeneous_degree(const Chart& c, const Poly& p);

// Terms filtered by a monomial predicate.
Poly filter(const Poly& p, const std::function<bool(const Monomial&)>& keep);

std::string to_string(const Chart& c, const Monomial& m);
std::string to_string(const Chart& c, const Poly& p);

}  // namespace lk
