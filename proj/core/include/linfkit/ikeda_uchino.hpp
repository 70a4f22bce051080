#pragma once

#include "linfkit/linfty.hpp"
#include "linfkit/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lk {

// Bidegree of a monomial on the T*[3] chart of a 3-term algebra.
// Positions of g0, g-1, g-2: (2,0), (0,1), (0,0); momenta: (0,1), (2,0), (2,1).
std::pair<int, int> bidegree(const Encoding& enc, const GradedSpace& space, const Monomial& m);

struct BidegreeSplit {
    Encoding enc;
    Poly theta2, theta13, theta4;  // bidegrees (4,0), (2,2), (0,4)
};

// Splits Theta = +sum l_i. Throws std::invalid_argument unless the degrees of
// g lie in 0, -1, -2 and std::logic_error on a monomial of another bidegree.
BidegreeSplit bidegree_split(const LInfty& g);

// Checks bideg{a,b} = bideg a + bideg b - (2,1) on pairs of chart monomials
// of degree <= max_degree.
Report audit_bracket_bidegree(const LInfty& g, int max_degree = 2, std::size_t witness_cap = 10);

enum class IUFormulas {
    Derived,  // the structure of Theta, used by default
    Printed,  // closed-form tables with other signs, kept for comparison
};

// Ikeda-Uchino algebroid on E = g-2* x (g-1* + g0) over g-2*. On the chart:
// sections are sums of f x_a and f alpha^i (alpha^i the momentum of m_i),
// sections of E* are sums of f xi^a (xi^a the momentum of x_a) and f m_i,
// functions f are polynomials in the g-2 positions.
struct IkedaUchinoData {
    LInfty g;
    Encoding enc;
    IUFormulas formulas = IUFormulas::Derived;
    std::vector<int> g0, g1, g2;   // basis ids
    std::vector<int> base;         // g-2 positions
    std::vector<int> x, alpha;     // generators of E
    std::vector<int> xi, m;        // generators of E*
    std::vector<int> gens;         // x then alpha: the order of E

    std::map<std::pair<int, int>, Poly> rho;     // (generator, base index) -> rho(e)(f_k)
    std::map<std::pair<int, int>, Poly> br;      // generator pair -> section
    std::map<std::pair<int, int>, Poly> pp;      // E* generator pair -> function
    std::map<int, Poly> partial;                 // E* generator -> section
    std::map<std::vector<int>, Poly> omega;      // increasing generator 4-tuples -> function

    const Chart& chart() const { return enc.chart; }
    Poly coord(int k) const { return Poly::variable(base.at(k)); }
    // E generator variable paired with an E* generator variable, and back.
    int dual(int var) const;

    std::map<int, Poly> components(const Poly& s) const;
    Poly anchor(const Poly& s, const Poly& f) const;
    Poly bracket(const Poly& s, const Poly& t) const;
    Poly pairing(const Poly& s, const Poly& a) const;  // <E, E*>
    Poly sym_pairing(const Poly& a, const Poly& b) const;  // (.,.)+ on E*
    Poly d(const Poly& a) const;                            // partial
    Poly lie(const Poly& s, const Poly& a) const;           // L_s on E*
    Poly Omega(const std::vector<Poly>& s) const;           // four sections
    Poly Omega_contract(const Poly& a, const Poly& b, const Poly& c) const;  // Omega(a,b,c,.)

    std::vector<Poly> sample_sections(int cap) const;
    std::vector<Poly> sample_cosections(int cap) const;
    std::vector<Poly> sample_functions(int cap) const;  // nonconstant
};

// Throws std::invalid_argument unless the degrees of g lie in 0, -1, -2.
IkedaUchinoData iu_from_3term(const LInfty& g, IUFormulas formulas = IUFormulas::Derived);

// (A1)-(A4), symmetry of (.,.)+ and, when l1^0 = l2^3 = l3^0 = l4 = 0,
// the vanishing of the Jacobiator, on generators with coefficient degree <= cap.
Report verify_iu_axioms(const IkedaUchinoData& d, int cap = 1, std::size_t witness_cap = 10);

// The tables against iterated brackets of theta2, theta13, theta4.
Report check_iu_derived_tables(const IkedaUchinoData& d, std::size_t witness_cap = 10);

// l1^0 = l2^3 = l3^0 = l4 = 0.
bool is_lie_algebroid_case(const LInfty& g);

// h0 = g0 + g-2 (x) g-1* (labels "f.i*"), h-1 = h0 cap ker(rho) (labels
// "h1", "h2", ...), l1 = inclusion, l2 = the algebroid bracket and
// l3 = -partial Omega(e1,e2,e3,.). Components of l3 outside h-1 are
// recorded as failures in report.
struct InducedTwoTerm {
    LInfty structure;
    std::map<int, Poly> element;  // basis id -> section
    Report report;
};
InducedTwoTerm induced_two_term(const LInfty& g);

}  // namespace lk
