#include <doctest.h>

#include "linfkit/graded_space.hpp"
#include "linfkit/linalg.hpp"
#include "linfkit/scalar.hpp"
#include "linfkit/sign.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace lk;

namespace {

// bubble sort, one factor per adjacent swap
int bubble_koszul(std::vector<int> perm, const std::vector<int>& deg, bool with_sgn)
{
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j + 1 < perm.size() - i; ++j)
            if (perm[j] > perm[j + 1]) {
                if ((deg[perm[j]] * deg[perm[j + 1]]) % 2 != 0)
                    s = -s;
                if (with_sgn)
                    s = -s;
                std::swap(perm[j], perm[j + 1]);
            }
    return s;
}

long long binom(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// plain Gauss-Jordan over Q
int gauss_rank(Matrix a)
{
    int r = 0;
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(a.size()) && a[p][c] == 0)
            ++p;
        if (p == static_cast<int>(a.size()))
            continue;
        std::swap(a[p], a[r]);
        for (int i = 0; i < static_cast<int>(a.size()); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Scalar f = a[i][c] / a[r][c];
            for (int j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols)
{
    std::uniform_int_distribution<int> v(-3, 3), z(0, 2);
    Matrix a(rows, std::vector<Scalar>(cols));
    for (auto& row : a)
        for (auto& x : row)
            x = z(rng) == 0 ? Scalar(0) : Scalar(v(rng));
    return a;
}

}  // namespace

TEST_CASE("scalar parsing and printing")
{
    CHECK(parse_scalar("3") == 3);
    CHECK(parse_scalar("-7") == -7);
    CHECK(parse_scalar("+2") == 2);
    CHECK(parse_scalar("2/4") == Scalar(1) / 2);
    CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
    CHECK(to_string(Scalar(5)) == "5");
    CHECK(to_string(parse_scalar("0/9")) == "0");
    CHECK(is_scalar_token("12/5"));
    CHECK_FALSE(is_scalar_token("1/0"));
    CHECK_FALSE(is_scalar_token("1.5"));
    CHECK_FALSE(is_scalar_token("x1"));
    CHECK_FALSE(is_scalar_token(""));
    CHECK_FALSE(is_scalar_token("-"));
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("a"), std::invalid_argument);
}

TEST_CASE("scalar arithmetic is exact")
{
    Scalar third = Scalar(1) / 3;
    CHECK(third + third + third == 1);
    CHECK(Scalar(1) / 2 - Scalar(1) / 3 == Scalar(1) / 6);
    CHECK(sign_of(Scalar(-2) / 7) == -1);
    Scalar big = 1;
    for (int i = 0; i < 40; ++i)
        big *= 10;
    CHECK(to_string(big + Scalar(1) / big).size() == 81 + 1 + 41);
}

TEST_CASE("koszul sign examples")
{
    std::vector<int> swap{1, 0};
    CHECK(koszul_sign(swap, std::vector<int>{1, 1}) == -1);
    CHECK(koszul_sign(swap, std::vector<int>{1, 2}) == 1);
    CHECK(koszul_sign(swap, std::vector<int>{0, 0}, true) == -1);
    CHECK(koszul_sign(swap, std::vector<int>{1, 1}, true) == 1);
    std::vector<int> cyc{1, 2, 0};
    CHECK(koszul_sign(cyc, std::vector<int>{1, 1, 1}) == 1);
    CHECK(koszul_sign(cyc, std::vector<int>{1, 0, 1}) == -1);
    std::vector<int> id{0, 1, 2};
    CHECK(koszul_sign(id, std::vector<int>{1, 1, 1}, true) == 1);
}

TEST_CASE("koszul sign matches bubble sort for n <= 5")
{
    for (int n = 0; n <= 5; ++n) {
        int patterns = 1 << n;
        for (int mask = 0; mask < patterns; ++mask) {
            std::vector<int> deg(n);
            for (int i = 0; i < n; ++i)
                deg[i] = (mask >> i) & 1 ? -1 : 2;
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                REQUIRE(koszul_sign(perm, deg) == bubble_koszul(perm, deg, false));
                REQUIRE(koszul_sign(perm, deg, true) == bubble_koszul(perm, deg, true));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("koszul sign is a cocycle")
{
    const int n = 4;
    std::vector<int> deg{1, 0, 3, 1};
    std::vector<int> s(n), t(n);
    std::iota(s.begin(), s.end(), 0);
    do {
        std::iota(t.begin(), t.end(), 0);
        do {
            std::vector<int> st(n), ds(n);
            for (int k = 0; k < n; ++k) {
                st[k] = s[t[k]];
                ds[k] = deg[s[k]];
            }
            REQUIRE(koszul_sign(st, deg) == koszul_sign(t, ds) * koszul_sign(s, deg));
            REQUIRE(koszul_sign(st, deg, true) == koszul_sign(t, ds, true) * koszul_sign(s, deg, true));
        } while (std::next_permutation(t.begin(), t.end()));
    } while (std::next_permutation(s.begin(), s.end()));
}

TEST_CASE("koszul sign rejects bad input")
{
    CHECK_THROWS_AS(koszul_sign(std::vector<int>{0, 0}, std::vector<int>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(koszul_sign(std::vector<int>{0, 2}, std::vector<int>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(koszul_sign(std::vector<int>{0, 1}, std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("permutation parity")
{
    CHECK(permutation_parity(std::vector<int>{0, 1, 2}) == 1);
    CHECK(permutation_parity(std::vector<int>{2, 1, 0}) == -1);
    CHECK(permutation_parity(std::vector<int>{1, 2, 0}) == 1);
}

TEST_CASE("unshuffles")
{
    for (int n = 0; n <= 6; ++n)
        for (int i = 0; i <= n; ++i) {
            auto u = unshuffles(n, i);
            CHECK(static_cast<long long>(u.size()) == binom(n, i));
            for (const auto& s : u) {
                REQUIRE(static_cast<int>(s.size()) == n);
                CHECK(std::is_sorted(s.begin(), s.begin() + i));
                CHECK(std::is_sorted(s.begin() + i, s.end()));
                std::vector<int> c = s;
                std::sort(c.begin(), c.end());
                for (int k = 0; k < n; ++k)
                    CHECK(c[k] == k);
            }
        }
    auto u = unshuffles(3, 1);
    CHECK(u == std::vector<std::vector<int>>{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}});
}

TEST_CASE("graded space ordering and lookup")
{
    GradedSpace V({{0, {"b", "a"}}, {-1, {"m"}}, {-2, {"z", "f"}}});
    REQUIRE(V.dim() == 5);
    CHECK(V.label(0) == "f");
    CHECK(V.label(1) == "z");
    CHECK(V.label(2) == "m");
    CHECK(V.label(3) == "a");
    CHECK(V.label(4) == "b");
    CHECK(V.degree(V.id("m")) == -1);
    CHECK(V.degrees() == std::vector<int>{-2, -1, 0});
    CHECK(V.ids_of_degree(0) == std::vector<int>{3, 4});
    CHECK(V.terms() == 3);
    CHECK(V.min_degree() == -2);
    CHECK(V.max_degree() == 0);
    CHECK_FALSE(V.find("q").has_value());
    CHECK_THROWS_AS(V.id("q"), std::invalid_argument);

    GradedSpace D = V.dual();
    CHECK(D.degree(D.id("f*")) == 2);
    CHECK(D.degree(D.id("a*")) == 0);
    CHECK(D.dim() == 5);

    Vec v{{3, 1}, {4, -2}};
    CHECK(V.homogeneous_degree(v) == 0);
    v[2] = 1;
    CHECK_FALSE(V.homogeneous_degree(v).has_value());

    ShiftedSpace S{&V, 1};
    CHECK(S.degree(V.id("a")) == -1);
}

TEST_CASE("graded space rejects duplicates")
{
    CHECK_THROWS_AS(GradedSpace({{0, {"a", "a"}}}), std::invalid_argument);
    CHECK_THROWS_AS(GradedSpace({{0, {"a"}}, {-1, {"a"}}}), std::invalid_argument);
    CHECK_THROWS_AS(GradedSpace({{0, {"a"}}, {0, {"b"}}}), std::invalid_argument);
    CHECK_THROWS_AS(GradedSpace({{0, {""}}}), std::invalid_argument);
    CHECK_THROWS_AS(GradedSpace(std::vector<GradedSpace::Component>{{0, std::vector<std::string>{}}}), std::invalid_argument);
}

TEST_CASE("sparse vectors")
{
    Vec y{{0, 1}};
    axpy(y, 2, Vec{{0, Scalar(-1) / 2}, {3, 1}});
    CHECK(y[0] == 0);
    CHECK(y[3] == 2);
    CHECK(scaled(basis_vec(2), 5).at(2) == 5);
    CHECK(is_zero(Vec{{1, 0}}));
}

TEST_CASE("kernel examples")
{
    Matrix a{{1, 2, 3}, {2, 4, 6}};
    auto k = kernel_basis(a);
    CHECK(k.size() == 2);
    CHECK(rank(a) == 1);
    CHECK(kernel_basis(Matrix{{1, 0}, {0, 1}}).empty());
    CHECK(kernel_basis(Matrix{}, 3).size() == 3);
    CHECK_THROWS_AS(kernel_basis(Matrix{}), std::invalid_argument);
    CHECK_THROWS_AS(rank(Matrix{{1, 2}, {3}}), std::invalid_argument);

    auto x = solve(Matrix{{1, 1}, {1, -1}}, {3, 1});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(Matrix{{1, 1}, {2, 2}}, {1, 3}).has_value());
    auto half = solve(Matrix{{2}}, {1});
    REQUIRE(half.has_value());
    CHECK((*half)[0] == Scalar(1) / 2);
}

TEST_CASE("kernel against Gauss-Jordan on random matrices")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> size(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int r = size(rng), c = size(rng);
        Matrix a = random_matrix(rng, r, c);
        if (trial % 5 == 0)
            for (auto& row : a)
                row[c - 1] = row[0] * 3;
        int rk = gauss_rank(a);
        REQUIRE(rank(a, c) == rk);
        auto k = kernel_basis(a, c);
        REQUIRE(static_cast<int>(k.size()) == c - rk);
        for (const auto& v : k) {
            REQUIRE(static_cast<int>(v.size()) == c);
            for (const auto& row : a) {
                Scalar s = 0;
                for (int j = 0; j < c; ++j)
                    s += row[j] * v[j];
                REQUIRE(s == 0);
            }
        }
        if (!k.empty()) {
            Matrix kb(k.begin(), k.end());
            CHECK(gauss_rank(kb) == static_cast<int>(k.size()));
        }
        std::vector<Scalar> b(r);
        std::vector<Scalar> x0(c);
        for (int j = 0; j < c; ++j)
            x0[j] = j - 1;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                b[i] += a[i][j] * x0[j];
        auto x = solve(a, b, c);
        REQUIRE(x.has_value());
        for (int i = 0; i < r; ++i) {
            Scalar s = 0;
            for (int j = 0; j < c; ++j)
                s += a[i][j] * (*x)[j];
            REQUIRE(s == b[i]);
        }
    }
}
