#pragma once

#include "linfkit/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lk {

// Polynomial multivector field on R^N: sum c x^e d_{i1} ^ ... ^ d_{ik}
// with i1 < ... < ik.
class PolyMultivector {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;  // (directions, exponents)

    explicit PolyMultivector(int base_dim = 0) : n_(base_dim) {}

    int base_dim() const { return n_; }
    // Directions in any order; the term picks up the sign of sorting them
    // and vanishes on a repeated direction.
    void add(std::vector<int> dirs, std::vector<int> exps, const Scalar& c);
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const PolyMultivector& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // Coefficient of d_dirs as a polynomial, exponents -> coefficient.
    std::map<std::vector<int>, Scalar> coefficient(const std::vector<int>& dirs) const;

    std::string to_string() const;

private:
    int n_;
    std::map<Key, Scalar> terms_;
};

PolyMultivector operator+(const PolyMultivector& a, const PolyMultivector& b);
PolyMultivector operator-(const PolyMultivector& a, const PolyMultivector& b);
PolyMultivector operator*(const PolyMultivector& a, const Scalar& s);

// The chart T*[1]R^N: x_i of degree 0 and p_i of degree 1 with {p_i, x_i} = 1.
struct MultivectorChart {
    Chart chart{1};
    std::vector<int> x, p;
};
MultivectorChart multivector_chart(int N);

// Conversion to polynomials in given coordinate ids (p_i standing for d_i).
Poly to_poly(const PolyMultivector& P, const Chart& c, const std::vector<int>& x, const std::vector<int>& p);
// Throws std::invalid_argument on monomials outside the x/p coordinates.
PolyMultivector from_poly(const Poly& f, const Chart& c, const std::vector<int>& x, const std::vector<int>& p);

// [P,Q]_S computed as the big bracket of T*[1]R^N, so [X,f] = X(f).
// Throws std::invalid_argument on a dimension mismatch.
PolyMultivector schouten_bracket(const PolyMultivector& P, const PolyMultivector& Q);

// Constant 3-form H = sum_{i<j<k} H_ijk dx^i dx^j dx^k stored as the full
// antisymmetric tensor.
class ConstantThreeForm {
public:
    ConstantThreeForm() = default;
    // Throws std::invalid_argument unless the tensor is antisymmetric.
    ConstantThreeForm(int N, std::vector<Scalar> full);
    static ConstantThreeForm from_triples(int N, const std::vector<Scalar>& ijk);
    int base_dim() const { return n_; }
    const Scalar& operator()(int i, int j, int k) const { return h_[(i * n_ + j) * n_ + k]; }
    // Coefficients on i<j<k in lexicographic order.
    std::vector<Scalar> triples() const;

private:
    int n_ = 0;
    std::vector<Scalar> h_;
};

// (wedge^3 pi^# H)^{ijk} = pi^{ia} pi^{jb} pi^{kc} H_abc.
PolyMultivector wedge3_sharp(const PolyMultivector& pi, const ConstantThreeForm& H);

// 1/2 [pi,pi] - wedge^3 pi^# H; zero iff pi is H-twisted Poisson.
PolyMultivector twisted_poisson_residual(const PolyMultivector& pi, const ConstantThreeForm& H);

}  // namespace lk
