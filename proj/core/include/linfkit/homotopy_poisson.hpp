#pragma once

#include "linfkit/poly.hpp"
#include "linfkit/report.hpp"

#include <vector>

namespace lk {

// Homotopy Poisson manifold of degree n presented on T*[n+1]M by a
// Hamiltonian of degree n+2 with {H,H} = 0.
struct HomotopyPoissonPresentation {
    Chart chart;
    Poly hamiltonian;
    int base_degree = 0;
};

// Degree and master-equation checks on the presentation.
Report validate(const HomotopyPoissonPresentation& P);

// l_k(a_1..a_k) = {a_k, ... {a_1, H}}|_M. Throws std::invalid_argument when
// an argument contains momenta.
Poly derived_bracket_extract(const HomotopyPoissonPresentation& P, const std::vector<Poly>& args);

// e^{-alpha} Theta |_M = Theta - {alpha,Theta} + 1/2 {alpha,{alpha,Theta}} - ...
// Throws std::invalid_argument when alpha contains momenta or has a degree
// other than n+1.
Poly canonical_transform_residual(const HomotopyPoissonPresentation& P, const Poly& alpha);

// sum_i (-1)^i / i! l_i(alpha, ..., alpha); skip_linear drops i = 1.
Poly mc_residual(const HomotopyPoissonPresentation& P, const Poly& alpha, bool skip_linear = false);

// Highest momentum order of the Hamiltonian.
int max_arity(const HomotopyPoissonPresentation& P);

// T*[2]T*[1]R^N with coordinates x_i (0), p_i (1) and momenta X_i (2), P_i (1).
// Theta = sum X_i P_i + sum_{i<j<k} H_ijk P_i P_j P_k, so that
// l_2(A,B) = (-1)^{(|A|+1)|B|} [A,B]_S and l_3(pi,pi,pi) = 6 wedge^3 pi^# H.
struct TwistedPoissonChart {
    HomotopyPoissonPresentation presentation;
    std::vector<int> x, p, X, P;
};

// H is given on i<j<k index triples (row-major over combinations).
TwistedPoissonChart twisted_poisson_presentation(int N, const std::vector<Scalar>& H);

}  // namespace lk
