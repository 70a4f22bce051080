#pragma once

#include "linfkit/courant.hpp"
#include "linfkit/linfty.hpp"
#include "linfkit/report.hpp"
#include "linfkit/schouten.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lk {

// The Courant algebroid of a 2-term g split as A + A* over g-1*:
// A = action algebroid of the abelian g0* (sections f xi^a), A* with
// rho_A*(x) = l2^1(x,.) and [x,y]_A* = l2^0(x,y) (sections f x_a).
// mu, gamma, phi are the arity 1, 2, 3 parts of Theta = -sum l_i.
struct LieQuasiBialgebroidData {
    CourantData cd;
    Poly mu, gamma, phi;

    Poly anchor_A(const Poly& a, const Poly& f) const;
    Poly bracket_A(const Poly& a, const Poly& b) const;
    Poly anchor_Astar(const Poly& s, const Poly& f) const;
    Poly bracket_Astar(const Poly& s, const Poly& t) const;
    // d_A f = sum_a rho_A(xi^a)(f) x_a.
    Poly d_A(const Poly& f) const;
    // (d_A s)(xi^a, xi^b) for a < b.
    std::map<std::pair<int, int>, Poly> d_A_section(const Poly& s) const;
    // phi(s,t,u) = -l3 extended function-linearly to sections of A*.
    Poly phi_eval(const Poly& s, const Poly& t, const Poly& u) const;
    // Components of a section.
    Poly a_part(const Poly& e) const;
    Poly astar_part(const Poly& e) const;
};

// Throws std::invalid_argument unless g is 2-term.
LieQuasiBialgebroidData split_quasi_bialgebroid(const LInfty& g);

// The four equations of (mu, gamma, phi), each on its own, and the
// controlled Jacobi identity of [.,.]_A* on constant sections.
Report verify_quasi_bialgebroid(const LieQuasiBialgebroidData& B, std::size_t witness_cap = 10);

// The 2-term algebra on functions + Ker(d_A) cut at weight <= cap, where
// w(f x) = deg f and w(f) = deg f - 1. Kernel generators of weight 0 carry
// the labels of g0, higher ones "k1", "k2", ...; functions are labelled by
// their monomial.
struct KerdTwoTerm {
    LInfty structure;
    std::map<int, Poly> element;  // basis id -> section or function
    Report report;                // closure of the slice
};
KerdTwoTerm kerd_two_term(const LieQuasiBialgebroidData& B, int cap = 1);

// Courant 2-term on Gamma(A) + Ker(d_A) -> kerd with F0 = pr2, F1 = Id and
// F2 = 1/2 <.,.>_-, checked pointwise on sample sections of weight <= cap.
Report verify_kerd_morphism(const LieQuasiBialgebroidData& B, const KerdTwoTerm& K, int cap = 1,
                            std::size_t witness_cap = 10);

enum class Convention { Left, Right };

// Multivector fields on g-1* x g0* with coordinates m_i (base) then x_a
// (fiber); directions are indexed the same way.
struct GroupoidBivector {
    LInfty g;
    int d1 = 0, d0 = 0;  // dim g-1, dim g0
    PolyMultivector pi{1};

    int m(int i) const { return i; }
    int x(int a) const { return d1 + a; }
    int dim() const { return d1 + d0; }
};

GroupoidBivector groupoid_bivector(const LInfty& g);

// Left or right translation of a section of wedge A (directions along the
// fiber, coefficients on the base). Left substitutes m -> m + s l1(m); right
// replaces d/dx_a by d/dx_a - s sum_i (l1 m_i)_a d/dm_i, with s = -1 for the
// left convention and +1 for the right one. Throws std::invalid_argument if
// Lambda has base directions or fiber dependence.
PolyMultivector translate(const GroupoidBivector& P, bool left, const PolyMultivector& Lambda,
                          Convention c = Convention::Left);

// phi = -l3 as a trivector along the fiber.
PolyMultivector groupoid_phi(const GroupoidBivector& P);

// 1/2[Pi,Pi] = <-phi - ->phi and [Pi,<-phi] = 0.
Report verify_quasi_poisson(const GroupoidBivector& P, const PolyMultivector& phi, Convention c = Convention::Left,
                            std::size_t witness_cap = 10);

// delta_Pi = delta on generators: <-(delta m) = -[t*m, Pi] and
// [xi_a, Pi] = delta xi_a, and t*m = m - l1 m.
Report verify_groupoid_generators(const GroupoidBivector& P, Convention c = Convention::Left,
                                  std::size_t witness_cap = 10);

}  // namespace lk
