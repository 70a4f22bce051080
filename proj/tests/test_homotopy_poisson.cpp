#include <doctest.h>

#include "linfkit/homotopy_poisson.hpp"
#include "linfkit/schouten.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace lk;

namespace {

// random multivector of a fixed arity on R^N, coefficients of degree <= 2
PolyMultivector random_multivector(int N, int arity, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dir(0, N - 1), e(0, 1), coef(-2, 2), count(1, 3);
    PolyMultivector P(N);
    int n = count(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> dirs;
        for (int k = 0; k < arity; ++k)
            dirs.push_back(dir(rng));
        std::vector<int> exps(N);
        for (auto& x : exps)
            x = e(rng);
        P.add(dirs, exps, Scalar(coef(rng)));
    }
    return P;
}

int sgn(long long e) { return e % 2 == 0 ? 1 : -1; }

std::vector<Scalar> zero_h(int N) { return std::vector<Scalar>(N * (N - 1) * (N - 2) / 6); }

}  // namespace

TEST_CASE("twisted Poisson presentation is valid")
{
    for (int N = 1; N <= 4; ++N) {
        std::vector<Scalar> H = zero_h(N);
        for (std::size_t i = 0; i < H.size(); ++i)
            H[i] = static_cast<int>(i) + 1;
        auto T = twisted_poisson_presentation(N, H);
        Report r = validate(T.presentation);
        CHECK(r.pass());
        REQUIRE(r.find("deg H = n+2") != nullptr);
        CHECK(homogeneous_degree(T.presentation.chart, T.presentation.hamiltonian) == T.presentation.base_degree + 2);
        CHECK(max_arity(T.presentation) == (N >= 3 ? 3 : 2));
    }
}

TEST_CASE("a Hamiltonian of the wrong degree is rejected")
{
    auto T = twisted_poisson_presentation(2, {});
    HomotopyPoissonPresentation P = T.presentation;
    P.hamiltonian += Poly::variable(T.X[0]);
    CHECK_FALSE(validate(P).pass());
}

TEST_CASE("derived brackets of the twisted presentation")
{
    std::vector<Scalar> H = zero_h(3);
    H[0] = 5;
    auto T = twisted_poisson_presentation(3, H);
    const auto& P = T.presentation;
    Poly x1 = Poly::variable(T.x[0]), p1 = Poly::variable(T.p[0]), p2 = Poly::variable(T.p[1]),
         p3 = Poly::variable(T.p[2]);
    // [d1, x1] = 1
    CHECK(derived_bracket_extract(P, {p1, x1}) == Poly::constant(1));
    CHECK(derived_bracket_extract(P, {x1}).is_zero());
    Poly l3 = derived_bracket_extract(P, {p1, p2, p3});
    CHECK((l3 == Poly::constant(5) || l3 == Poly::constant(-5)));
    CHECK(derived_bracket_extract(P, {p1, p1, p3}).is_zero());
    CHECK_THROWS_AS(derived_bracket_extract(P, {Poly::variable(T.X[0])}), std::invalid_argument);
}

TEST_CASE("l2 is the Schouten bracket up to a sign")
{
    std::mt19937_64 rng(3);
    const int N = 3;
    auto T = twisted_poisson_presentation(N, zero_h(N));
    const auto& P = T.presentation;
    const Chart& c = P.chart;
    for (int t = 0; t < 40; ++t) {
        PolyMultivector A = random_multivector(N, t % 3, rng), B = random_multivector(N, (t / 3) % 3, rng);
        Poly l2 = derived_bracket_extract(P, {to_poly(A, c, T.x, T.p), to_poly(B, c, T.x, T.p)});
        // l2(A,B) = (-1)^{(|A|+1)|B|} [A,B]_S
        int sign = sgn(static_cast<long long>(t % 3 + 1) * ((t / 3) % 3));
        REQUIRE(from_poly(l2, c, T.x, T.p) == schouten_bracket(A, B) * Scalar(sign));
    }
}

TEST_CASE("l2 is a derivation of the product")
{
    std::mt19937_64 rng(4);
    const int N = 3;
    auto T = twisted_poisson_presentation(N, zero_h(N));
    const auto& P = T.presentation;
    const Chart& c = P.chart;
    for (int t = 0; t < 40; ++t) {
        int da = t % 3, df = (t / 3) % 2;
        Poly a = to_poly(random_multivector(N, da, rng), c, T.x, T.p);
        Poly f = to_poly(random_multivector(N, df, rng), c, T.x, T.p);
        Poly g = to_poly(random_multivector(N, 1, rng), c, T.x, T.p);
        // D = {., {a, Theta}} acts from the right: D(fg) = f D(g) + (-1)^{|g| delta} D(f) g, delta = |a| - 1
        int dg = 1;
        Poly lhs = derived_bracket_extract(P, {a, mul(c, f, g)});
        Poly rhs = mul(c, f, derived_bracket_extract(P, {a, g})) +
                   mul(c, derived_bracket_extract(P, {a, f}), g) * Scalar(sgn(static_cast<long long>(da - 1) * dg));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("Maurer-Cartan examples")
{
    auto T = twisted_poisson_presentation(3, zero_h(3));
    const auto& P = T.presentation;
    const Chart& c = P.chart;
    PolyMultivector pi(3);
    pi.add({0, 1}, {0, 0, 1}, 1);  // x3 d1 d2
    CHECK(mc_residual(P, to_poly(pi, c, T.x, T.p)).is_zero());
    PolyMultivector bad(3);
    bad.add({0, 1}, {0, 1, 0}, 1);
    bad.add({1, 2}, {0, 0, 0}, 1);
    Poly r = mc_residual(P, to_poly(bad, c, T.x, T.p));
    CHECK_FALSE(r.is_zero());
    CHECK(from_poly(r, c, T.x, T.p) == schouten_bracket(bad, bad) * (Scalar(1) / 2));

    // a vector field has degree 1, not n+1
    PolyMultivector X(3);
    X.add({0}, {0, 0, 0}, 1);
    CHECK_THROWS_AS(canonical_transform_residual(P, to_poly(X, c, T.x, T.p)), std::invalid_argument);
    CHECK_THROWS_AS(canonical_transform_residual(P, Poly::variable(T.X[0])), std::invalid_argument);
}

TEST_CASE("canonical transform equals the Maurer-Cartan sum")
{
    std::mt19937_64 rng(8);
    for (int N : {3, 4}) {
        std::vector<Scalar> H = zero_h(N);
        for (auto& h : H)
            h = static_cast<int>(rng() % 5) - 2;
        auto T = twisted_poisson_presentation(N, H);
        const auto& P = T.presentation;
        const Chart& c = P.chart;
        for (int t = 0; t < 10; ++t) {
            Poly alpha = to_poly(random_multivector(N, 2, rng), c, T.x, T.p);
            // Theta|_M = 0 and {alpha, Theta}|_M = 0 here
            REQUIRE(restrict_to_base(c, P.hamiltonian).is_zero());
            REQUIRE(derived_bracket_extract(P, {alpha}).is_zero());
            Poly ct = canonical_transform_residual(P, alpha);
            REQUIRE(ct == mc_residual(P, alpha, true));
            REQUIRE(ct == mc_residual(P, alpha, false));
        }
    }
}

TEST_CASE("the i = 1 term of the Maurer-Cartan sum")
{
    // an arity-1 term X1 p1 gives l1(x1 p2 p3) = +-p1 p2 p3
    auto T = twisted_poisson_presentation(3, zero_h(3));
    HomotopyPoissonPresentation P = T.presentation;
    const Chart& c = P.chart;
    Poly extra = mul(c, Poly::variable(T.X[0]), Poly::variable(T.p[0]));
    P.hamiltonian += extra;
    REQUIRE(homogeneous_degree(c, P.hamiltonian) == 3);
    Poly alpha = product(c, {Poly::variable(T.x[0]), Poly::variable(T.p[1]), Poly::variable(T.p[2])});
    Poly l1 = derived_bracket_extract(P, {alpha});
    CHECK(l1.size() == 1);
    CHECK(momentum_order(c, l1.terms.begin()->first) == 0);
    CHECK(mc_residual(P, alpha, false) - mc_residual(P, alpha, true) == -l1);
}
