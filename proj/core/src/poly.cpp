#include "linfkit/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lk {

int Chart::add(std::string name, int degree, bool momentum)
{
    if (index_.count(name))
        throw std::invalid_argument("duplicate chart variable '" + name + "'");
    int id = size();
    index_.emplace(name, id);
    vars_.push_back({std::move(name), degree, momentum, std::nullopt});
    return id;
}

void Chart::pair(int q, int p)
{
    if (degree(q) + degree(p) != shift_)
        throw std::invalid_argument("conjugate degrees of " + name(q) + ", " + name(p) +
                                    " do not add up to the chart shift");
    long long dd = static_cast<long long>(degree(q)) * degree(p);
    vars_.at(q).partner = Partner{p, 1};
    vars_.at(p).partner = Partner{q, dd % 2 == 0 ? -1 : 1};
}

int Chart::var(std::string_view n) const
{
    auto f = find(n);
    if (!f)
        throw std::out_of_range("unknown chart variable '" + std::string(n) + "'");
    return *f;
}

std::optional<int> Chart::find(std::string_view n) const
{
    auto it = index_.find(std::string(n));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int monomial_degree(const Chart& c, const Monomial& m)
{
    int d = 0;
    for (const auto& [v, e] : m)
        d += c.degree(v) * e;
    return d;
}

int momentum_order(const Chart& c, const Monomial& m)
{
    int k = 0;
    for (const auto& [v, e] : m)
        if (c.is_momentum(v))
            k += e;
    return k;
}

std::optional<std::pair<int, Monomial>> normalize_monomial(const Chart& c, const std::vector<int>& factors)
{
    std::vector<int> f = factors;
    for (int v : f)
        if (v < 0 || v >= c.size())
            throw std::out_of_range("unknown chart variable id");
    int sign = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j + 1 < f.size() - i; ++j)
            if (f[j] > f[j + 1]) {
                if (c.odd(f[j]) && c.odd(f[j + 1]))
                    sign = -sign;
                std::swap(f[j], f[j + 1]);
            }
    Monomial m;
    for (int v : f) {
        if (!m.empty() && m.back().first == v) {
            if (c.odd(v))
                return std::nullopt;
            ++m.back().second;
        } else {
            m.emplace_back(v, 1);
        }
    }
    return std::make_pair(sign, std::move(m));
}

std::optional<std::pair<int, Monomial>> normalize_monomial(const Chart& c, const std::vector<std::string>& factors)
{
    std::vector<int> ids;
    for (const auto& n : factors)
        ids.push_back(c.var(n));
    return normalize_monomial(c, ids);
}

Poly Poly::constant(const Scalar& s)
{
    Poly p;
    if (s != 0)
        p.terms.emplace(Monomial{}, s);
    return p;
}

Poly Poly::variable(int v)
{
    Poly p;
    p.terms.emplace(Monomial{{v, 1}}, Scalar(1));
    return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c)
{
    if (c == 0)
        return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& s)
{
    if (s == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, c] : terms)
        c *= s;
    return *this;
}

Scalar Poly::coefficient(const Monomial& m) const
{
    auto it = terms.find(m);
    return it == terms.end() ? Scalar(0) : it->second;
}

Poly operator+(Poly a, const Poly& b)
{
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b)
{
    a -= b;
    return a;
}

Poly operator*(Poly a, const Scalar& s)
{
    a *= s;
    return a;
}

Poly operator-(Poly a)
{
    a *= Scalar(-1);
    return a;
}

std::pair<int, Monomial> multiply_monomials(const Chart& c, const Monomial& a, const Monomial& b)
{
    int sign = 1;
    // Moving each odd factor of b left past the odd factors of a with larger index.
    int odd_after = 0;
    {
        std::size_t ia = a.size();
        for (std::size_t jb = b.size(); jb-- > 0;) {
            int vb = b[jb].first;
            while (ia > 0 && a[ia - 1].first > vb) {
                --ia;
                if (c.odd(a[ia].first) && (a[ia].second % 2))
                    ++odd_after;
            }
            if (c.odd(vb) && (b[jb].second % 2) && (odd_after % 2))
                sign = -sign;
        }
    }
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            if (c.odd(a[i].first))
                return {0, {}};
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return {sign, std::move(r)};
}

Poly mul(const Chart& c, const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            auto [s, m] = multiply_monomials(c, ma, mb);
            if (s == 0)
                continue;
            r.add_term(m, s > 0 ? Scalar(ca * cb) : Scalar(-(ca * cb)));
        }
    return r;
}

Poly product(const Chart& c, const std::vector<Poly>& factors)
{
    Poly r = Poly::constant(1);
    for (const auto& f : factors) {
        r = mul(c, r, f);
        if (r.is_zero())
            break;
    }
    return r;
}

namespace {

Monomial drop_one(const Monomial& m, std::size_t pos)
{
    Monomial r = m;
    if (r[pos].second == 1)
        r.erase(r.begin() + static_cast<long>(pos));
    else
        --r[pos].second;
    return r;
}

template <bool Left>
Poly derivative(const Chart& c, int v, const Poly& p)
{
    Poly r;
    const bool vodd = c.odd(v);
    for (const auto& [m, coef] : p.terms) {
        int before = 0, total = 0;
        std::size_t pos = m.size();
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k].first == v)
                pos = k;
            else if (pos == m.size())
                before += c.degree(m[k].first) * m[k].second;
            total += c.degree(m[k].first) * m[k].second;
        }
        if (pos == m.size())
            continue;
        int e = m[pos].second;
        int sign = 1;
        if (vodd) {
            int passed = Left ? before : total - before - c.degree(v) * e;
            if (passed % 2)
                sign = -1;
        }
        Scalar k = coef * e;
        if (sign < 0)
            k = -k;
        r.add_term(drop_one(m, pos), k);
    }
    return r;
}

}  // namespace

Poly left_derivative(const Chart& c, int v, const Poly& p)
{
    return derivative<true>(c, v, p);
}

Poly right_derivative(const Chart& c, int v, const Poly& p)
{
    return derivative<false>(c, v, p);
}

Poly bracket(const Chart& c, const Poly& f, const Poly& g)
{
    Poly r;
    if (f.is_zero() || g.is_zero())
        return r;
    std::set<int> vf, vg;
    for (const auto& [m, x] : f.terms)
        for (const auto& [v, e] : m)
            vf.insert(v);
    for (const auto& [m, x] : g.terms)
        for (const auto& [v, e] : m)
            vg.insert(v);
    for (int a : vf) {
        const auto& pr = c.partner(a);
        if (!pr || !vg.count(pr->var))
            continue;
        Poly fa = right_derivative(c, a, f);
        if (fa.is_zero())
            continue;
        Poly gb = left_derivative(c, pr->var, g);
        if (gb.is_zero())
            continue;
        Poly t = mul(c, fa, gb);
        if (pr->sign < 0)
            r -= t;
        else
            r += t;
    }
    return r;
}

Poly restrict_to_base(const Chart& c, const Poly& p)
{
    Poly r;
    for (const auto& [m, x] : p.terms) {
        bool keep = true;
        for (const auto& [v, e] : m)
            if (c.is_momentum(v)) {
                keep = false;
                break;
            }
        if (keep)
            r.terms.emplace(m, x);
    }
    return r;
}

bool has_momentum(const Chart& c, const Poly& p)
{
    for (const auto& [m, x] : p.terms)
        for (const auto& [v, e] : m)
            if (c.is_momentum(v))
                return true;
    return false;
}

Poly substitute(const Chart& c, const Poly& p, const std::map<int, Poly>& images)
{
    Poly r;
    for (const auto& [m, x] : p.terms) {
        Poly t = Poly::constant(x);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            for (int k = 0; k < e; ++k)
                t = mul(c, t, it == images.end() ? Poly::variable(v) : it->second);
            if (t.is_zero())
                break;
        }
        r += t;
    }
    return r;
}

std::optional<int> homogeneous_degree(const Chart& c, const Poly& p)
{
    std::optional<int> d;
    for (const auto& [m, x] : p.terms) {
        int dm = monomial_degree(c, m);
        if (d && *d != dm)
            return std::nullopt;
        d = dm;
    }
    return d;
}

Poly filter(const Poly& p, const std::function<bool(const Monomial&)>& keep)
{
    Poly r;
    for (const auto& [m, x] : p.terms)
        if (keep(m))
            r.terms.emplace(m, x);
    return r;
}

std::string to_string(const Chart& c, const Monomial& m)
{
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty())
            s += '*';
        s += c.name(v);
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

std::string to_string(const Chart& c, const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, x] : p.terms) {
        Scalar a = abs(x);
        if (first)
            out << (x < 0 ? "-" : "");
        else
            out << (x < 0 ? " - " : " + ");
        first = false;
        if (m.empty()) {
            out << to_string(a);
        } else {
            if (a != 1)
                out << to_string(a) << '*';
            out << to_string(c, m);
        }
    }
    return out.str();
}

}  // namespace lk
