#include "linfkit/schouten.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lk {

void PolyMultivector::add(std::vector<int> dirs, std::vector<int> exps, const Scalar& c)
{
    if (c == 0)
        return;
    exps.resize(n_, 0);
    int sign = 1;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = 0; j + 1 < dirs.size() - i; ++j)
            if (dirs[j] > dirs[j + 1]) {
                std::swap(dirs[j], dirs[j + 1]);
                sign = -sign;
            }
    for (std::size_t j = 0; j + 1 < dirs.size(); ++j)
        if (dirs[j] == dirs[j + 1])
            return;
    for (int d : dirs)
        if (d < 0 || d >= n_)
            throw std::out_of_range("direction index out of range");
    Key k{std::move(dirs), std::move(exps)};
    auto it = terms_.find(k);
    Scalar v = sign > 0 ? c : Scalar(-c);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), v);
    } else {
        it->second += v;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::map<std::vector<int>, Scalar> PolyMultivector::coefficient(const std::vector<int>& dirs) const
{
    std::map<std::vector<int>, Scalar> r;
    for (const auto& [k, c] : terms_)
        if (k.first == dirs)
            r.emplace(k.second, c);
    return r;
}

std::string PolyMultivector::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        out << (first ? "" : " + ") << lk::to_string(c);
        first = false;
        for (int i = 0; i < n_; ++i)
            if (k.second[i])
                out << "*x" << i + 1 << (k.second[i] > 1 ? "^" + std::to_string(k.second[i]) : "");
        for (int d : k.first)
            out << "*d" << d + 1;
    }
    return out.str();
}

PolyMultivector operator+(const PolyMultivector& a, const PolyMultivector& b)
{
    PolyMultivector r = a;
    for (const auto& [k, c] : b.terms())
        r.add(k.first, k.second, c);
    return r;
}

PolyMultivector operator-(const PolyMultivector& a, const PolyMultivector& b)
{
    return a + b * Scalar(-1);
}

PolyMultivector operator*(const PolyMultivector& a, const Scalar& s)
{
    PolyMultivector r(a.base_dim());
    for (const auto& [k, c] : a.terms())
        r.add(k.first, k.second, c * s);
    return r;
}

MultivectorChart multivector_chart(int N)
{
    MultivectorChart m;
    for (int i = 0; i < N; ++i)
        m.x.push_back(m.chart.add("x" + std::to_string(i + 1), 0));
    for (int i = 0; i < N; ++i) {
        m.p.push_back(m.chart.add("p" + std::to_string(i + 1), 1, true));
        m.chart.pair(m.p[i], m.x[i]);
    }
    return m;
}

Poly to_poly(const PolyMultivector& P, const Chart& c, const std::vector<int>& x, const std::vector<int>& p)
{
    Poly r;
    for (const auto& [k, coef] : P.terms()) {
        std::vector<Poly> f;
        for (int i = 0; i < P.base_dim(); ++i)
            for (int e = 0; e < k.second[i]; ++e)
                f.push_back(Poly::variable(x.at(i)));
        for (int d : k.first)
            f.push_back(Poly::variable(p.at(d)));
        r += product(c, f) * coef;
    }
    return r;
}

PolyMultivector from_poly(const Poly& f, const Chart& c, const std::vector<int>& x, const std::vector<int>& p)
{
    const int N = static_cast<int>(x.size());
    PolyMultivector r(N);
    for (const auto& [m, coef] : f.terms) {
        std::vector<int> exps(N, 0), dirs;
        for (const auto& [v, e] : m) {
            auto ix = std::find(x.begin(), x.end(), v);
            auto ip = std::find(p.begin(), p.end(), v);
            if (ix != x.end())
                exps[ix - x.begin()] = e;
            else if (ip != p.end())
                dirs.push_back(static_cast<int>(ip - p.begin()));
            else
                throw std::invalid_argument("monomial " + to_string(c, m) + " is not a multivector");
        }
        // Normal form orders p's by chart id; keep that order and let add() sort.
        std::vector<std::pair<int, int>> order;
        for (const auto& [v, e] : m) {
            auto ip = std::find(p.begin(), p.end(), v);
            if (ip != p.end())
                order.emplace_back(v, static_cast<int>(ip - p.begin()));
        }
        std::vector<int> d;
        for (const auto& o : order)
            d.push_back(o.second);
        r.add(d, exps, coef);
    }
    return r;
}

PolyMultivector schouten_bracket(const PolyMultivector& P, const PolyMultivector& Q)
{
    if (P.base_dim() != Q.base_dim())
        throw std::invalid_argument("multivectors on different spaces");
    MultivectorChart m = multivector_chart(P.base_dim());
    Poly b = bracket(m.chart, to_poly(P, m.chart, m.x, m.p), to_poly(Q, m.chart, m.x, m.p));
    return from_poly(b, m.chart, m.x, m.p);
}

ConstantThreeForm::ConstantThreeForm(int N, std::vector<Scalar> full) : n_(N), h_(std::move(full))
{
    if (static_cast<int>(h_.size()) != N * N * N)
        throw std::invalid_argument("3-form needs N^3 coefficients");
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                const Scalar& v = (*this)(i, j, k);
                if (v != -(*this)(j, i, k) || v != -(*this)(i, k, j))
                    throw std::invalid_argument("H is not antisymmetric");
            }
}

ConstantThreeForm ConstantThreeForm::from_triples(int N, const std::vector<Scalar>& ijk)
{
    std::vector<Scalar> full(N * N * N);
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = j + 1; k < N; ++k, ++idx) {
                if (idx >= ijk.size())
                    throw std::invalid_argument("too few H coefficients");
                const int t[3] = {i, j, k};
                const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
                for (int s = 0; s < 6; ++s) {
                    int a = t[perms[s][0]], b = t[perms[s][1]], c = t[perms[s][2]];
                    full[(a * N + b) * N + c] = s < 3 ? ijk[idx] : Scalar(-ijk[idx]);
                }
            }
    if (idx != ijk.size())
        throw std::invalid_argument("too many H coefficients");
    return ConstantThreeForm(N, std::move(full));
}

std::vector<Scalar> ConstantThreeForm::triples() const
{
    std::vector<Scalar> r;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k)
                r.push_back((*this)(i, j, k));
    return r;
}

PolyMultivector wedge3_sharp(const PolyMultivector& pi, const ConstantThreeForm& H)
{
    const int N = pi.base_dim();
    if (H.base_dim() != N)
        throw std::invalid_argument("3-form on a different space");
    MultivectorChart m = multivector_chart(N);
    // pi^{ij} as polynomials in x.
    std::vector<std::vector<Poly>> P(N, std::vector<Poly>(N));
    for (const auto& [k, c] : pi.terms()) {
        if (k.first.size() != 2)
            throw std::invalid_argument("pi is not a bivector");
        std::vector<Poly> f;
        for (int i = 0; i < N; ++i)
            for (int e = 0; e < k.second[i]; ++e)
                f.push_back(Poly::variable(m.x[i]));
        Poly mono = product(m.chart, f) * c;
        P[k.first[0]][k.first[1]] += mono;
        P[k.first[1]][k.first[0]] -= mono;
    }
    PolyMultivector r(N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = j + 1; k < N; ++k) {
                Poly s;
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b)
                        for (int c = 0; c < N; ++c) {
                            const Scalar& h = H(a, b, c);
                            if (h == 0 || P[i][a].is_zero() || P[j][b].is_zero() || P[k][c].is_zero())
                                continue;
                            s += mul(m.chart, mul(m.chart, P[i][a], P[j][b]), P[k][c]) * h;
                        }
                for (const auto& [mono, c] : s.terms) {
                    std::vector<int> exps(N, 0);
                    for (const auto& [v, e] : mono)
                        exps[v] = e;
                    r.add({i, j, k}, exps, c);
                }
            }
    return r;
}

PolyMultivector twisted_poisson_residual(const PolyMultivector& pi, const ConstantThreeForm& H)
{
    return schouten_bracket(pi, pi) * Scalar(1, 2) - wedge3_sharp(pi, H);
}

}  // namespace lk
