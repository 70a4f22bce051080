#pragma once

#include "linfkit/graded_space.hpp"
#include "linfkit/poly.hpp"
#include "linfkit/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lk {

using Tuple = std::vector<int>;

// Sparse structure constants l_k on canonical (sorted) tuples of basis ids.
// Other orderings are read through graded antisymmetry:
// swapping neighbours a, b costs -(-1)^{|a||b|}.
class LInfty {
public:
    LInfty() = default;
    explicit LInfty(GradedSpace space) : space_(std::move(space)) {}

    const GradedSpace& space() const { return space_; }

    // Sign and sorted tuple; sign 0 when antisymmetry forces the value to vanish.
    std::pair<int, Tuple> canonicalize(const Tuple& args) const;

    // Stores l(args) = out for an arbitrary ordering of args. A zero vector erases.
    // Throws std::invalid_argument when args is forced to vanish but out is not zero.
    void set(const Tuple& args, const Vec& out);
    void set(const std::vector<std::string>& args, const std::vector<std::pair<std::string, Scalar>>& out);
    void add(const Tuple& args, const Vec& out);

    Vec eval(const Tuple& args) const;
    // Multilinear extension to vectors.
    Vec eval_vec(const std::vector<Vec>& args) const;

    const std::map<int, std::map<Tuple, Vec>>& maps() const { return maps_; }
    const std::map<Tuple, Vec>& arity(int k) const;
    int max_arity() const;
    bool is_zero() const { return maps_.empty(); }
    // Constants of l_k whose sorted input degrees equal degrees (e.g. l_2^1 = {-1, 0}).
    std::map<Tuple, Vec> component(int k, std::vector<int> degrees) const;

    bool operator==(const LInfty& o) const { return space_ == o.space_ && maps_ == o.maps_; }

    std::string tuple_string(const Tuple& t) const;
    std::string vec_string(const Vec& v) const;

private:
    GradedSpace space_;
    std::map<int, std::map<Tuple, Vec>> maps_;
};

// Every stored constant of l_k must land in degree sum(inputs) + 2 - k.
Report degree_audit(const LInfty& L);

// The higher Jacobi identities for n = 1..n_max on every multiset of basis
// elements, one check per n.
Report check_higher_jacobi(const LInfty& L, int n_max);

// The symmetric form Σ l_k on the chart T*[n]g[n-1] of an n-term algebra:
// basis e of degree j gives a position e (degree j+n-1) and a momentum e*
// (degree 1-j) with {e, e*} = 1.
struct Encoding {
    Chart chart;
    Poly hamiltonian;
    int terms = 0;
    std::vector<int> position;  // indexed by basis id
    std::vector<int> momentum;
};

Encoding make_chart(const GradedSpace& space, int n);
// Throws std::invalid_argument when L fails the degree audit.
Encoding hamiltonian_encode(const LInfty& L, int n);
// l(args) from {a_k, ... {a_1, H}}|_M. Throws std::logic_error when the
// derived value is not linear in the positions.
Vec extract(const Encoding& enc, const GradedSpace& space, const Tuple& args);
// All canonical tuples of arity <= k_max.
LInfty decode(const Encoding& enc, const GradedSpace& space, int k_max);

// Iterated bracket {a_k, ... {a_1, H}} restricted to the base.
Poly derived_bracket(const Chart& chart, const Poly& H, const std::vector<Poly>& args);

struct MasterEquation {
    Poly square;                        // {H, H}
    std::map<int, Poly> arity_parts;    // 1/2 {H,H} split by momentum order
    Report report;
};

MasterEquation check_master_equation(const Chart& chart, const Poly& H, std::size_t witness_cap = 10);
// {H_i, H_j} for the arity-i and arity-j parts of H.
Poly arity_bracket(const Chart& chart, const Poly& H, int i, int j);

// 2-term morphism g -> g'. F0 : g0 -> g0', F1 : g-1 -> g-1', F2 on pairs of g0.
struct TwoTermMorphism {
    std::map<int, Vec> F0;
    std::map<int, Vec> F1;
    std::map<std::pair<int, int>, Vec> F2;  // keys with first < second

    Vec f0(const Vec& x) const;
    Vec f1(const Vec& m) const;
    Vec f2(const Vec& x, const Vec& y) const;
    void set_f2(int a, int b, const Vec& v);
};

bool is_two_term(const LInfty& L);
// Conditions (i)-(iv) on all basis tuples. Throws std::invalid_argument
// unless both sides are 2-term.
Report verify_morphism(const TwoTermMorphism& F, const LInfty& g, const LInfty& gp);

}  // namespace lk
