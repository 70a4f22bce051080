#pragma once

#include "linfkit/linfty.hpp"
#include "linfkit/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace lk {

// Courant algebroid E = g-1* x (g0 + g0*) over the base g-1* of a 2-term
// algebra g. Sections and functions live on the T*[2] chart of g: a section
// is a sum of f * x_a and f * xi^a (xi^a the momentum of x_a) with f a
// polynomial in the base coordinates m_i.
struct CourantData {
    LInfty g;
    Encoding enc;
    int hamiltonian_sign = -1;  // Theta = hamiltonian_sign * sum l_i
    std::vector<int> g0, g1;    // basis ids
    std::vector<int> base;      // chart variable of m_i, indexed like g1
    std::vector<int> x, xi;     // chart variables, indexed like g0

    const Chart& chart() const { return enc.chart; }
    Poly theta() const { return enc.hamiltonian * Scalar(hamiltonian_sign); }

    Poly gen_x(int a) const { return Poly::variable(x.at(a)); }
    Poly gen_xi(int a) const { return Poly::variable(xi.at(a)); }
    Poly coord(int i) const { return Poly::variable(base.at(i)); }

    // Generator variable -> coefficient function. Throws
    // std::invalid_argument if e is not a section.
    std::map<int, Poly> components(const Poly& e) const;

    // rho(e) applied to a base function.
    Poly anchor(const Poly& e, const Poly& f) const;
    Poly pairing(const Poly& e1, const Poly& e2) const;
    Poly D(const Poly& f) const;
    Poly dorfman(const Poly& e1, const Poly& e2) const;
    Poly courant(const Poly& e1, const Poly& e2) const;
    // 1/6 <[[e1,e2]],e3> + c.p.
    Poly T(const Poly& e1, const Poly& e2, const Poly& e3) const;
    Poly jacobiator(const Poly& e1, const Poly& e2, const Poly& e3) const;

    // Generator sections with base monomial coefficients of degree <= cap.
    std::vector<Poly> sample_sections(int cap) const;
    std::vector<Poly> sample_functions(int cap) const;
};

// Throws std::invalid_argument unless g is 2-term.
CourantData courant_from_2term(const LInfty& g);

// e o e = 1/2 D<e,e> (polarized), invariance, Leibniz, the Jacobiator
// identity and <e,Df> = rho(e)f on generator sections of coefficient
// degree <= cap.
Report verify_courant_axioms(const CourantData& cd, int cap = 2, std::size_t witness_cap = 10);

// The table above against the derived brackets of Theta.
Report check_derived_route(const CourantData& cd, int cap = 1, std::size_t witness_cap = 10);

// Basis of g~ = g0 + (g0* (x) g-1) in degree 0 and g-1 in degree -1; the
// element xi^a (x) m_i is labelled "a*.i".
GradedSpace new_two_term_space(const LInfty& g);
std::string tensor_label(const std::string& a, const std::string& m);

// l1 = D, l2 = [[.,.]], l2(e,f) = 1/2 rho(e)f, l3 = -T on the sections of g~.
// Throws std::logic_error if a bracket leaves the linear sections.
LInfty twoterm_from_courant(const CourantData& cd);

// Closed-form g~. Throws std::invalid_argument unless g is 2-term.
LInfty new_two_term(const LInfty& g);

// g~ -> g with F0 = pr1, F1 = Id, F2 = 1/2(<xi,y>m - <x,eta>n).
TwoTermMorphism canonical_morphism(const LInfty& g);

}  // namespace lk
