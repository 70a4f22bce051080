#pragma once

#include "linfkit/linfty.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace lk {

using Rng = std::mt19937_64;

// exp(ad beta) applied to the Hamiltonian of L on the n-term chart, decoded
// back to structure constants of arity <= k_max. beta carries maps of
// degree 1-k and is encoded as sum c * e*_{a1}...e*_{ak} e_out without
// normalization. Throws std::runtime_error if the series does not terminate.
LInfty gauge_transform(const LInfty& L, int n, const LInfty& beta, int k_max = 5);

// Random gauge transformation of a valid seed: random F2-type components on
// pairs (g0,g0) -> g-1 and, for n = 3, (g0,g-1) -> g-2.
LInfty random_gauge(const LInfty& seed, int n, Rng& rng);

// Conjugation by a random invertible matrix preserving each degree.
LInfty random_basis_change(const LInfty& L, Rng& rng);

// Sparse candidate satisfying the degree rule; usually not an L-infinity algebra.
LInfty random_candidate(const GradedSpace& space, double density, int coef_bound, int k_max, Rng& rng);

// Inverse of a square matrix over the rationals; throws std::invalid_argument if singular.
std::vector<std::vector<Scalar>> inverse(const std::vector<std::vector<Scalar>>& m);

namespace instances {

LInfty abelian(const GradedSpace& space);
// V -> V with l1 = Id, dim V = d: v0.. in degree 0, m0.. in degree -1.
LInfty omni(int d);
// R -> k with l2 = [.,.]_k and l3(u,v,w) = K([u,v],w) when K is given.
// brackets: (i, j, {(k, c)}) meaning [u_i, u_j] = sum c u_k.
struct LieAlgebra {
    std::vector<std::string> labels;
    std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>> brackets;
};
LInfty string_type(const LieAlgebra& k, const std::vector<std::vector<Scalar>>* K = nullptr,
                   const std::string& r = "r");
LieAlgebra sl2();
LieAlgebra so3();
LieAlgebra aff1();
// Invariant forms: trace form on sl2, identity on so3.
std::vector<std::vector<Scalar>> sl2_form();
std::vector<std::vector<Scalar>> so3_form();
// k -Id-> k with k = aff(1), [a,b] = b acting on itself.
LInfty identity_aff();
LInfty heisenberg();
LInfty abelian_with_l1();
LInfty solvable_action();
// 3-term examples (degrees 0, -1, -2).
LInfty three_term_c();
LInfty three_term_d();
LInfty three_term_e();

}  // namespace instances

}  // namespace lk
