#include "linfkit/generate.hpp"

#include <stdexcept>

namespace lk {

namespace {

template <class F>
void for_each_multiset(int dim, int n, F&& f)
{
    if (n == 0 || dim == 0)
        return;
    Tuple t(n, 0);
    while (true) {
        f(t);
        int k = n - 1;
        while (k >= 0 && t[k] == dim - 1)
            --k;
        if (k < 0)
            return;
        ++t[k];
        for (int j = k + 1; j < n; ++j)
            t[j] = t[k];
    }
}

Poly encode_plain(const Encoding& enc, const LInfty& beta)
{
    Poly B;
    for (const auto& [k, tab] : beta.maps())
        for (const auto& [tup, out] : tab) {
            std::vector<Poly> f;
            for (int a : tup)
                f.push_back(Poly::variable(enc.momentum[a]));
            Poly mono = product(enc.chart, f);
            for (const auto& [o, c] : out)
                B += mul(enc.chart, mono, Poly::variable(enc.position[o])) * c;
        }
    return B;
}

}  // namespace

LInfty gauge_transform(const LInfty& L, int n, const LInfty& beta, int k_max)
{
    Encoding enc = hamiltonian_encode(L, n);
    Poly B = encode_plain(enc, beta);
    Poly r = enc.hamiltonian, term = enc.hamiltonian;
    for (int k = 1;; ++k) {
        if (k > 64)
            throw std::runtime_error("gauge series does not terminate");
        term = bracket(enc.chart, B, term) * Scalar(1, k);
        if (term.is_zero())
            break;
        r += term;
    }
    enc.hamiltonian = r;
    return decode(enc, L.space(), k_max);
}

LInfty random_gauge(const LInfty& seed, int n, Rng& rng)
{
    const auto& sp = seed.space();
    const auto g0 = sp.ids_of_degree(0), g1 = sp.ids_of_degree(-1), g2 = sp.ids_of_degree(-2);
    std::uniform_int_distribution<int> coef(-2, 2);
    LInfty beta(sp);
    auto pick = [&](const std::vector<int>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
    if (!g1.empty())
        for (std::size_t i = 0; i < g0.size(); ++i)
            for (std::size_t j = i + 1; j < g0.size(); ++j)
                beta.set({g0[i], g0[j]}, Vec{{pick(g1), Scalar(coef(rng))}});
    if (n >= 3 && !g2.empty())
        for (int a : g0)
            for (int m : g1)
                beta.set({a, m}, Vec{{pick(g2), Scalar(coef(rng))}});
    return random_basis_change(gauge_transform(seed, n, beta, n + 2), rng);
}

std::vector<std::vector<Scalar>> inverse(const std::vector<std::vector<Scalar>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw std::invalid_argument("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("singular matrix");
        std::swap(a[c], a[p]);
        Scalar pv = a[c][c];
        for (auto& x : a[c])
            x /= pv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && a[r][c] != 0) {
                Scalar f = a[r][c];
                for (std::size_t j = 0; j < 2 * n; ++j)
                    a[r][j] -= f * a[c][j];
            }
    }
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

LInfty random_basis_change(const LInfty& L, Rng& rng)
{
    const auto& sp = L.space();
    std::vector<Vec> image(sp.dim()), back(sp.dim());
    std::uniform_int_distribution<int> diag(0, 2), off(-2, 2);
    std::bernoulli_distribution fill(0.5);
    const Scalar diag_values[3] = {1, 2, -1};
    for (int d : sp.degrees()) {
        const auto ids = sp.ids_of_degree(d);
        const std::size_t n = ids.size();
        std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n));
        for (std::size_t i = 0; i < n; ++i) {
            M[i][i] = diag_values[diag(rng)];
            for (std::size_t j = i + 1; j < n; ++j)
                if (fill(rng))
                    M[i][j] = off(rng);
        }
        auto Mi = inverse(M);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (M[i][j] != 0)
                    image[ids[i]][ids[j]] = M[i][j];
                if (Mi[i][j] != 0)
                    back[ids[i]][ids[j]] = Mi[i][j];
            }
    }
    LInfty N(sp);
    for (const auto& [k, tab] : L.maps())
        for_each_multiset(sp.dim(), k, [&](const Tuple& t) {
            if (N.canonicalize(t).first == 0)
                return;
            std::vector<Vec> args;
            for (int a : t)
                args.push_back(image[a]);
            Vec v = L.eval_vec(args), out;
            for (const auto& [o, c] : v)
                axpy(out, c, back[o]);
            if (!out.empty())
                N.set(t, out);
        });
    return N;
}

LInfty random_candidate(const GradedSpace& space, double density, int coef_bound, int k_max, Rng& rng)
{
    LInfty L(space);
    std::bernoulli_distribution take(density);
    std::uniform_int_distribution<int> coef(-coef_bound, coef_bound);
    for (int k = 1; k <= k_max; ++k)
        for_each_multiset(space.dim(), k, [&](const Tuple& t) {
            if (L.canonicalize(t).first == 0)
                return;
            int d = 2 - k;
            for (int a : t)
                d += space.degree(a);
            const auto outs = space.ids_of_degree(d);
            if (outs.empty() || !take(rng))
                return;
            Vec v;
            for (int o : outs) {
                int c = coef(rng);
                if (c)
                    v[o] = c;
            }
            L.set(t, v);
        });
    return L;
}

namespace instances {

namespace {

GradedSpace make_space(const std::vector<std::pair<int, std::vector<std::string>>>& comps)
{
    std::vector<GradedSpace::Component> c;
    for (const auto& [d, l] : comps)
        c.push_back({d, l});
    return GradedSpace(c);
}

}  // namespace

LInfty abelian(const GradedSpace& space)
{
    return LInfty(space);
}

LInfty omni(int d)
{
    std::vector<std::string> v, m;
    for (int i = 0; i < d; ++i) {
        v.push_back("v" + std::to_string(i));
        m.push_back("m" + std::to_string(i));
    }
    LInfty L(make_space({{0, v}, {-1, m}}));
    for (int i = 0; i < d; ++i)
        L.set({m[i]}, {{v[i], 1}});
    return L;
}

LInfty string_type(const LieAlgebra& k, const std::vector<std::vector<Scalar>>* K, const std::string& r)
{
    LInfty L(make_space({{0, k.labels}, {-1, {r}}}));
    const int n = static_cast<int>(k.labels.size());
    std::vector<std::vector<Vec>> br(n, std::vector<Vec>(n));
    for (const auto& [ij, out] : k.brackets) {
        std::vector<std::pair<std::string, Scalar>> o;
        Vec v;
        for (const auto& [t, c] : out) {
            o.emplace_back(k.labels[t], c);
            v[t] += c;
        }
        L.set({k.labels[ij.first], k.labels[ij.second]}, o);
        br[ij.first][ij.second] = v;
        br[ij.second][ij.first] = scaled(v, Scalar(-1));
    }
    if (K)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    Scalar s = 0;
                    for (const auto& [t, x] : br[a][b])
                        s += x * (*K)[t][c];
                    if (s != 0)
                        L.set({k.labels[a], k.labels[b], k.labels[c]}, {{r, s}});
                }
    return L;
}

LieAlgebra sl2()
{
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h with labels e, f, h.
    return LieAlgebra{{"e", "f", "h"}, {{{2, 0}, {{0, 2}}}, {{2, 1}, {{1, -2}}}, {{0, 1}, {{2, 1}}}}};
}

LieAlgebra so3()
{
    return LieAlgebra{{"u1", "u2", "u3"}, {{{0, 1}, {{2, 1}}}, {{1, 2}, {{0, 1}}}, {{2, 0}, {{1, 1}}}}};
}

LieAlgebra aff1()
{
    return LieAlgebra{{"a", "b"}, {{{0, 1}, {{1, 1}}}}};
}

std::vector<std::vector<Scalar>> sl2_form()
{
    // (e,f) = 1, (h,h) = 2.
    return {{0, 1, 0}, {1, 0, 0}, {0, 0, 2}};
}

std::vector<std::vector<Scalar>> so3_form()
{
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
}

LInfty identity_aff()
{
    LInfty L(make_space({{0, {"a", "b"}}, {-1, {"ma", "mb"}}}));
    L.set({"ma"}, {{"a", 1}});
    L.set({"mb"}, {{"b", 1}});
    L.set({"a", "b"}, {{"b", 1}});
    L.set({"a", "mb"}, {{"mb", 1}});
    L.set({"b", "ma"}, {{"mb", -1}});
    return L;
}

LInfty heisenberg()
{
    LInfty L(make_space({{0, {"a", "b", "z"}}, {-1, {"r"}}}));
    L.set({"a", "b"}, {{"z", 1}});
    L.set({"r"}, {{"z", 1}});
    return L;
}

LInfty abelian_with_l1()
{
    LInfty L(make_space({{0, {"a", "b", "c"}}, {-1, {"r"}}}));
    L.set({"r"}, {{"a", 1}});
    return L;
}

LInfty solvable_action()
{
    LInfty L(make_space({{0, {"a", "b", "c"}}, {-1, {"r"}}}));
    L.set({"a", "b"}, {{"b", 1}});
    L.set({"a", "c"}, {{"c", -1}});
    L.set({"a", "r"}, {{"r", 1}});
    L.set({"r"}, {{"b", 1}});
    return L;
}

LInfty three_term_c()
{
    LInfty L(make_space({{0, {"a", "b"}}, {-1, {"m", "n"}}, {-2, {"f", "g"}}}));
    L.set({"a", "b"}, {{"b", 1}});
    L.set({"a", "m"}, {{"m", 1}});
    L.set({"a", "n"}, {{"n", 1}});
    L.set({"a", "f"}, {{"f", 2}});
    L.set({"a", "g"}, {{"g", 1}});
    L.set({"m", "m"}, {{"f", 1}});
    L.set({"m"}, {{"b", 1}});
    L.set({"g"}, {{"n", 1}});
    return L;
}

LInfty three_term_d()
{
    LInfty L(make_space({{0, {"a", "b"}}, {-1, {"m"}}, {-2, {"f", "g"}}}));
    L.set({"a", "b"}, {{"b", 1}});
    L.set({"a", "m"}, {{"m", 1}});
    L.set({"a", "f"}, {{"f", 1}});
    L.set({"a", "g"}, {{"g", -1}});
    L.set({"f"}, {{"m", 1}});
    return L;
}

LInfty three_term_e()
{
    LInfty L(make_space({{0, {"a", "b", "c", "d"}}, {-1, {"m", "n"}}, {-2, {"f"}}}));
    L.set({"m"}, {{"a", 1}});
    L.set({"f"}, {{"n", 1}});
    L.set({"b", "m"}, {{"m", 1}});
    L.set({"b", "a"}, {{"a", 1}});
    L.set({"b", "n"}, {{"n", 1}});
    L.set({"b", "f"}, {{"f", 1}});
    return L;
}

}  // namespace instances

}  // namespace lk
