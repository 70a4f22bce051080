#include "linfkit/ikeda_uchino.hpp"

#include "linfkit/linalg.hpp"
#include "linfkit/sign.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lk {

namespace {

int index_in(const std::vector<int>& v, int x)
{
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

Scalar at(const Vec& v, int id)
{
    auto it = v.find(id);
    return it == v.end() ? Scalar(0) : it->second;
}

bool is_three_term(const LInfty& g)
{
    for (int d : g.space().degrees())
        if (d > 0 || d < -2)
            return false;
    return true;
}

std::pair<int, int> var_bidegree(const Encoding& enc, const GradedSpace& space, int v)
{
    for (int id = 0; id < space.dim(); ++id) {
        if (enc.position[id] == v) {
            switch (space.degree(id)) {
            case 0: return {2, 0};
            case -1: return {0, 1};
            default: return {0, 0};
            }
        }
        if (enc.momentum[id] == v) {
            switch (space.degree(id)) {
            case 0: return {0, 1};
            case -1: return {2, 0};
            default: return {2, 1};
            }
        }
    }
    throw std::out_of_range("unknown chart variable");
}

Poly theta_part(const Encoding& enc, const GradedSpace& space, std::pair<int, int> b)
{
    return filter(enc.hamiltonian, [&](const Monomial& m) { return bidegree(enc, space, m) == b; });
}

}  // namespace

std::pair<int, int> bidegree(const Encoding& enc, const GradedSpace& space, const Monomial& m)
{
    std::pair<int, int> r{0, 0};
    for (const auto& [v, e] : m) {
        auto b = var_bidegree(enc, space, v);
        r.first += b.first * e;
        r.second += b.second * e;
    }
    return r;
}

BidegreeSplit bidegree_split(const LInfty& g)
{
    if (!is_three_term(g))
        throw std::invalid_argument("the bidegree split needs degrees in 0, -1, -2");
    BidegreeSplit s;
    s.enc = hamiltonian_encode(g, 3);
    for (const auto& [m, c] : s.enc.hamiltonian.terms) {
        auto b = bidegree(s.enc, g.space(), m);
        if (b == std::make_pair(4, 0))
            s.theta2.add_term(m, c);
        else if (b == std::make_pair(2, 2))
            s.theta13.add_term(m, c);
        else if (b == std::make_pair(0, 4))
            s.theta4.add_term(m, c);
        else
            throw std::logic_error("monomial " + to_string(s.enc.chart, m) + " of bidegree (" +
                                   std::to_string(b.first) + "," + std::to_string(b.second) + ")");
    }
    return s;
}

Report audit_bracket_bidegree(const LInfty& g, int max_degree, std::size_t witness_cap)
{
    if (!is_three_term(g))
        throw std::invalid_argument("the bidegree audit needs a 3-term algebra");
    Encoding enc = make_chart(g.space(), 3);
    const Chart& c = enc.chart;
    std::vector<Monomial> monos{{}};
    std::vector<Monomial> layer{{}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : layer) {
            int from = m.empty() ? 0 : m.back().first;
            for (int v = from; v < c.size(); ++v) {
                Monomial n = m;
                if (!n.empty() && n.back().first == v) {
                    if (c.odd(v))
                        continue;
                    ++n.back().second;
                } else {
                    n.emplace_back(v, 1);
                }
                next.push_back(n);
            }
        }
        monos.insert(monos.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    const std::string name = "bideg{a,b} = bideg a + bideg b - (2,1)";
    Report r(witness_cap);
    r.check(name);
    for (const auto& a : monos)
        for (const auto& b : monos) {
            Poly pa, pb;
            pa.add_term(a, 1);
            pb.add_term(b, 1);
            Poly br = bracket(c, pa, pb);
            if (br.is_zero())
                continue;
            auto ba = bidegree(enc, g.space(), a), bb = bidegree(enc, g.space(), b);
            std::pair<int, int> want{ba.first + bb.first - 2, ba.second + bb.second - 1};
            bool ok = true;
            for (const auto& [m, k] : br.terms)
                ok = ok && bidegree(enc, g.space(), m) == want;
            r.record(name, ok, "{" + to_string(c, a) + ", " + to_string(c, b) + "}");
        }
    return r;
}

int IkedaUchinoData::dual(int var) const
{
    if (int i = index_in(x, var); i >= 0)
        return xi[i];
    if (int i = index_in(alpha, var); i >= 0)
        return m[i];
    if (int i = index_in(xi, var); i >= 0)
        return x[i];
    if (int i = index_in(m, var); i >= 0)
        return alpha[i];
    throw std::invalid_argument("not a generator: " + chart().name(var));
}

std::map<int, Poly> IkedaUchinoData::components(const Poly& s) const
{
    std::map<int, Poly> r;
    for (const auto& [mono, c] : s.terms) {
        int gen = -1;
        Monomial rest;
        for (const auto& [v, e] : mono) {
            if (index_in(base, v) >= 0) {
                rest.emplace_back(v, e);
            } else if (gen < 0 && e == 1) {
                dual(v);
                gen = v;
            } else {
                throw std::invalid_argument("not a section: " + to_string(chart(), mono));
            }
        }
        if (gen < 0)
            throw std::invalid_argument("not a section: " + to_string(chart(), mono));
        r[gen].add_term(rest, c);
    }
    return r;
}

Poly IkedaUchinoData::anchor(const Poly& s, const Poly& f) const
{
    const Chart& c = chart();
    Poly r;
    for (const auto& [u, h] : components(s))
        for (std::size_t k = 0; k < base.size(); ++k) {
            Poly df = right_derivative(c, base[k], f);
            auto it = rho.find({u, static_cast<int>(k)});
            if (df.is_zero() || it == rho.end())
                continue;
            r += mul(c, mul(c, h, df), it->second);
        }
    return r;
}

Poly IkedaUchinoData::bracket(const Poly& s, const Poly& t) const
{
    const Chart& c = chart();
    Poly r;
    auto S = components(s), T = components(t);
    for (const auto& [u, f] : S)
        for (const auto& [v, g] : T) {
            Poly eu = Poly::variable(u), ev = Poly::variable(v);
            auto it = br.find({u, v});
            if (it != br.end())
                r += mul(c, mul(c, f, g), it->second);
            r += mul(c, mul(c, f, anchor(eu, g)), ev);
            r -= mul(c, mul(c, g, anchor(ev, f)), eu);
        }
    return r;
}

Poly IkedaUchinoData::pairing(const Poly& s, const Poly& a) const
{
    const Chart& c = chart();
    auto A = components(a);
    Poly r;
    for (const auto& [u, f] : components(s)) {
        auto it = A.find(dual(u));
        if (it != A.end())
            r += mul(c, f, it->second);
    }
    return r;
}

Poly IkedaUchinoData::sym_pairing(const Poly& a, const Poly& b) const
{
    const Chart& c = chart();
    auto B = components(b);
    Poly r;
    for (const auto& [u, f] : components(a))
        for (const auto& [v, g] : B) {
            auto it = pp.find({u, v});
            if (it != pp.end())
                r += mul(c, mul(c, f, g), it->second);
        }
    return r;
}

Poly IkedaUchinoData::d(const Poly& a) const
{
    Poly r;
    for (const auto& [u, f] : components(a)) {
        auto it = partial.find(u);
        if (it != partial.end())
            r += mul(chart(), f, it->second);
    }
    return r;
}

Poly IkedaUchinoData::lie(const Poly& s, const Poly& a) const
{
    Poly r;
    for (int e : gens) {
        Poly ev = Poly::variable(e);
        Poly v = anchor(s, pairing(ev, a)) - pairing(bracket(s, ev), a);
        r += mul(chart(), v, Poly::variable(dual(e)));
    }
    return r;
}

Poly IkedaUchinoData::Omega(const std::vector<Poly>& s) const
{
    if (s.size() != 4)
        throw std::invalid_argument("Omega takes four sections");
    const Chart& c = chart();
    std::vector<std::map<int, Poly>> comps;
    for (const auto& e : s)
        comps.push_back(components(e));
    Poly r;
    std::vector<int> picked;
    std::function<void(std::size_t, const Poly&)> rec = [&](std::size_t i, const Poly& acc) {
        if (i == 4) {
            std::vector<int> pos;
            for (int v : picked)
                pos.push_back(index_in(gens, v));
            for (int p : pos)
                if (p < 0)
                    throw std::invalid_argument("Omega takes sections of E");
            std::vector<int> idx{0, 1, 2, 3};
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pos[a] < pos[b]; });
            std::vector<int> key;
            for (int k : idx)
                key.push_back(picked[k]);
            for (int k = 0; k + 1 < 4; ++k)
                if (key[k] == key[k + 1])
                    return;
            auto it = omega.find(key);
            if (it == omega.end())
                return;
            r += mul(c, acc, it->second) * Scalar(permutation_parity(idx));
            return;
        }
        for (const auto& [v, f] : comps[i]) {
            picked.push_back(v);
            rec(i + 1, mul(c, acc, f));
            picked.pop_back();
        }
    };
    rec(0, Poly::constant(1));
    return r;
}

Poly IkedaUchinoData::Omega_contract(const Poly& a, const Poly& b, const Poly& c) const
{
    Poly r;
    for (int e : gens)
        r += mul(chart(), Omega({a, b, c, Poly::variable(e)}), Poly::variable(dual(e)));
    return r;
}

std::vector<Poly> IkedaUchinoData::sample_functions(int cap) const
{
    std::vector<Poly> r;
    std::vector<std::vector<int>> layer{{}};
    for (int d = 1; d <= cap; ++d) {
        std::vector<std::vector<int>> next;
        for (const auto& mono : layer) {
            int from = mono.empty() ? 0 : mono.back();
            for (int i = from; i < static_cast<int>(base.size()); ++i) {
                auto n = mono;
                n.push_back(i);
                std::vector<Poly> f;
                for (int j : n)
                    f.push_back(coord(j));
                r.push_back(product(chart(), f));
                next.push_back(std::move(n));
            }
        }
        layer = std::move(next);
    }
    return r;
}

std::vector<Poly> IkedaUchinoData::sample_sections(int cap) const
{
    std::vector<Poly> funs{Poly::constant(1)};
    for (auto& f : sample_functions(cap))
        funs.push_back(f);
    std::vector<Poly> r;
    for (int e : gens)
        for (const auto& f : funs)
            r.push_back(mul(chart(), f, Poly::variable(e)));
    return r;
}

std::vector<Poly> IkedaUchinoData::sample_cosections(int cap) const
{
    std::vector<Poly> r;
    for (const auto& s : sample_sections(cap))
        for (const auto& [u, f] : components(s))
            r.push_back(mul(chart(), f, Poly::variable(dual(u))));
    return r;
}

IkedaUchinoData iu_from_3term(const LInfty& g, IUFormulas formulas)
{
    if (!is_three_term(g))
        throw std::invalid_argument("the Ikeda-Uchino algebroid needs a 3-term algebra");
    IkedaUchinoData d;
    d.g = g;
    d.formulas = formulas;
    d.enc = hamiltonian_encode(g, 3);
    const GradedSpace& S = g.space();
    d.g0 = S.ids_of_degree(0);
    d.g1 = S.ids_of_degree(-1);
    d.g2 = S.ids_of_degree(-2);
    for (int id : d.g2)
        d.base.push_back(d.enc.position[id]);
    for (int id : d.g0) {
        d.x.push_back(d.enc.position[id]);
        d.xi.push_back(d.enc.momentum[id]);
    }
    for (int id : d.g1) {
        d.alpha.push_back(d.enc.momentum[id]);
        d.m.push_back(d.enc.position[id]);
    }
    d.gens = d.x;
    d.gens.insert(d.gens.end(), d.alpha.begin(), d.alpha.end());
    const bool derived = formulas == IUFormulas::Derived;
    const Chart& c = d.chart();
    const int n0 = static_cast<int>(d.g0.size()), n1 = static_cast<int>(d.g1.size()),
              n2 = static_cast<int>(d.g2.size());

    auto lf = [&](const Vec& v) {
        Poly r;
        for (const auto& [id, k] : v)
            if (int i = index_in(d.g2, id); i >= 0)
                r += d.coord(i) * k;
        return r;
    };
    auto put = [](auto& table, const auto& key, const Poly& p) {
        if (!p.is_zero())
            table[key] = p;
    };

    for (int k = 0; k < n2; ++k) {
        for (int a = 0; a < n0; ++a)
            put(d.rho, std::make_pair(d.x[a], k), -lf(g.eval({d.g0[a], d.g2[k]})));
        for (int i = 0; i < n1; ++i)
            put(d.rho, std::make_pair(d.alpha[i], k), Poly::constant(-at(g.eval({d.g2[k]}), d.g1[i])));
    }

    const Scalar mixed = derived ? 1 : -1;
    for (int a = 0; a < n0; ++a) {
        for (int b = 0; b < n0; ++b) {
            Poly r;
            for (const auto& [o, k] : g.eval({d.g0[a], d.g0[b]}))
                r -= Poly::variable(d.x[index_in(d.g0, o)]) * k;
            for (int i = 0; i < n1; ++i)
                r -= mul(c, lf(g.eval({d.g0[a], d.g0[b], d.g1[i]})), Poly::variable(d.alpha[i]));
            put(d.br, std::make_pair(d.x[a], d.x[b]), r);
        }
        for (int j = 0; j < n1; ++j) {
            Poly r;
            for (int i = 0; i < n1; ++i)
                r += Poly::variable(d.alpha[i]) * (mixed * at(g.eval({d.g0[a], d.g1[i]}), d.g1[j]));
            put(d.br, std::make_pair(d.x[a], d.alpha[j]), r);
            put(d.br, std::make_pair(d.alpha[j], d.x[a]), -r);
        }
    }

    const Scalar mm = derived ? -1 : 1;
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j)
            put(d.pp, std::make_pair(d.m[i], d.m[j]), lf(g.eval({d.g1[i], d.g1[j]})) * mm);
        for (int a = 0; a < n0; ++a) {
            Scalar v = at(g.eval({d.g1[i]}), d.g0[a]);
            put(d.pp, std::make_pair(d.m[i], d.xi[a]), Poly::constant(v));
            put(d.pp, std::make_pair(d.xi[a], d.m[i]), Poly::constant(derived ? v : Scalar(-v)));
        }
    }

    std::vector<int> cogens = d.xi;
    cogens.insert(cogens.end(), d.m.begin(), d.m.end());
    if (derived) {
        for (int u : cogens) {
            Poly r;
            for (int e : d.gens) {
                auto it = d.pp.find({u, d.dual(e)});
                if (it != d.pp.end())
                    r += mul(c, it->second, Poly::variable(e));
            }
            put(d.partial, u, r);
        }
    } else {
        for (int a = 0; a < n0; ++a) {
            Poly r;
            for (int i = 0; i < n1; ++i)
                r -= Poly::variable(d.alpha[i]) * at(g.eval({d.g1[i]}), d.g0[a]);
            put(d.partial, d.xi[a], r);
        }
        for (int i = 0; i < n1; ++i) {
            Poly r;
            for (const auto& [o, k] : g.eval({d.g1[i]}))
                if (int a = index_in(d.g0, o); a >= 0)
                    r += Poly::variable(d.x[a]) * k;
            for (int j = 0; j < n1; ++j)
                r += mul(c, lf(g.eval({d.g1[i], d.g1[j]})), Poly::variable(d.alpha[j]));
            put(d.partial, d.m[i], r);
        }
    }

    const int ne = static_cast<int>(d.gens.size());
    for (int p = 0; p < ne; ++p)
        for (int q = p + 1; q < ne; ++q)
            for (int s = q + 1; s < ne; ++s)
                for (int t = s + 1; t < ne; ++t) {
                    std::vector<int> key{d.gens[p], d.gens[q], d.gens[s], d.gens[t]};
                    if (t < n0) {
                        put(d.omega, key, lf(g.eval({d.g0[p], d.g0[q], d.g0[s], d.g0[t]})));
                    } else if (s < n0) {
                        Scalar v = at(g.eval({d.g0[p], d.g0[q], d.g0[s]}), d.g1[t - n0]);
                        put(d.omega, key, Poly::constant(-v));
                    }
                }
    return d;
}

bool is_lie_algebroid_case(const LInfty& g)
{
    return g.component(1, {-1}).empty() && g.component(2, {-1, -1}).empty() && g.component(3, {0, 0, 0}).empty() &&
           g.component(4, {0, 0, 0, 0}).empty();
}

Report verify_iu_axioms(const IkedaUchinoData& d, int cap, std::size_t witness_cap)
{
    const Chart& c = d.chart();
    const auto secs = d.sample_sections(cap);
    const auto cosecs = d.sample_cosections(cap);
    const auto funs = d.sample_functions(cap + 1);
    const bool corollary = is_lie_algebroid_case(d.g);
    const std::string a1a = "(A1) rho[e1,e2] = [rho e1, rho e2]", a1b = "(A1) [e1,f e2] = f[e1,e2] + rho(e1)(f) e2",
                      a2 = "(A2) [[e1,e2],e3] + c.p. = partial Omega(e1,e2,e3,.)", a3a = "(A3) rho o partial = 0",
                      a3b = "(A3) delta Omega = 0", a4 = "(A4) rho(e)(a,b)+ = (L_e a,b)+ + (a,L_e b)+",
                      sym = "(a,b)+ = (b,a)+", jac0 = "Lie algebroid case: [[e1,e2],e3] + c.p. = 0";
    auto S = [&](const Poly& p) { return to_string(c, p); };
    Report r(witness_cap);
    for (const auto& n : {a1a, a1b, a2, a3a, a3b, a4, sym})
        r.check(n);
    if (corollary)
        r.check(jac0);

    Report pairs = detail::parallel_checks(secs.size(), witness_cap, [&](std::size_t i, Report& rep) {
        const Poly& e1 = secs[i];
        rep.check(a1a);
        rep.check(a1b);
        rep.check(a2);
        if (corollary)
            rep.check(jac0);
        for (const auto& e2 : secs) {
            Poly b12 = d.bracket(e1, e2);
            for (const auto& f : funs) {
                Poly l = d.anchor(b12, f) - d.anchor(e1, d.anchor(e2, f)) + d.anchor(e2, d.anchor(e1, f));
                rep.record(a1a, l.is_zero(), "e1=" + S(e1) + " e2=" + S(e2) + " f=" + S(f) + " defect " + S(l));
                Poly fe2 = mul(c, f, e2);
                Poly lb = d.bracket(e1, fe2) - mul(c, f, b12) - mul(c, d.anchor(e1, f), e2);
                rep.record(a1b, lb.is_zero(), "e1=" + S(e1) + " e2=" + S(e2) + " f=" + S(f));
            }
            for (const auto& e3 : secs) {
                Poly J = d.bracket(b12, e3) + d.bracket(d.bracket(e2, e3), e1) + d.bracket(d.bracket(e3, e1), e2);
                Poly w = J - d.d(d.Omega_contract(e1, e2, e3));
                std::string tag = "e1=" + S(e1) + " e2=" + S(e2) + " e3=" + S(e3);
                rep.record(a2, w.is_zero(), w.is_zero() ? std::string() : tag + " defect " + S(w));
                if (corollary)
                    rep.record(jac0, J.is_zero(), J.is_zero() ? std::string() : tag + " Jacobiator " + S(J));
            }
        }
    });
    r.merge(pairs);

    for (const auto& a : cosecs) {
        Poly da = d.d(a);
        for (const auto& f : funs) {
            Poly v = d.anchor(da, f);
            r.record(a3a, v.is_zero(), "a=" + S(a) + " f=" + S(f) + " defect " + S(v));
        }
        for (const auto& b : cosecs) {
            Poly v = d.sym_pairing(a, b) - d.sym_pairing(b, a);
            r.record(sym, v.is_zero(), "a=" + S(a) + " b=" + S(b));
        }
    }
    for (const auto& s : secs)
        for (const auto& a : cosecs) {
            Poly la = d.lie(s, a);
            for (const auto& b : cosecs) {
                Poly v = d.anchor(s, d.sym_pairing(a, b)) - d.sym_pairing(la, b) - d.sym_pairing(a, d.lie(s, b));
                r.record(a4, v.is_zero(), "e=" + S(s) + " a=" + S(a) + " b=" + S(b) + " defect " + S(v));
            }
        }

    // delta Omega on non-decreasing 5-tuples of sample sections
    const std::size_t n = secs.size();
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> t(5, 0);
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t k, std::size_t from) {
        if (k == 5) {
            tuples.push_back(t);
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            t[k] = i;
            gen(k + 1, i);
        }
    };
    gen(0, 0);
    Report dom = detail::parallel_checks(tuples.size(), witness_cap, [&](std::size_t q, Report& rep) {
        std::vector<Poly> s;
        for (std::size_t i : tuples[q])
            s.push_back(secs[i]);
        Poly tot;
        for (int i = 0; i < 5; ++i) {
            std::vector<Poly> rest;
            for (int k = 0; k < 5; ++k)
                if (k != i)
                    rest.push_back(s[k]);
            Poly v = d.anchor(s[i], d.Omega(rest));
            tot += i % 2 ? -v : v;
        }
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                std::vector<Poly> rest{d.bracket(s[i], s[j])};
                for (int k = 0; k < 5; ++k)
                    if (k != i && k != j)
                        rest.push_back(s[k]);
                Poly v = d.Omega(rest);
                tot += (i + j) % 2 ? -v : v;
            }
        std::string w;
        if (!tot.is_zero()) {
            for (const auto& e : s)
                w += (w.empty() ? "" : ", ") + S(e);
            w = "(" + w + ") defect " + S(tot);
        }
        rep.record(a3b, tot.is_zero(), w);
    });
    r.merge(dom);
    return r;
}

Report check_iu_derived_tables(const IkedaUchinoData& d, std::size_t witness_cap)
{
    const Chart& c = d.chart();
    const GradedSpace& sp = d.g.space();
    const Poly t2 = theta_part(d.enc, sp, {4, 0});
    const Poly t13 = theta_part(d.enc, sp, {2, 2});
    const Poly t4 = theta_part(d.enc, sp, {0, 4});
    // E* generators m_i stand for -m_i on the chart.
    auto chart_cosec = [&](int u) {
        Poly v = Poly::variable(u);
        return index_in(d.m, u) >= 0 ? -v : v;
    };
    auto get = [](const auto& table, const auto& key) {
        auto it = table.find(key);
        return it == table.end() ? Poly() : it->second;
    };
    std::vector<int> cogens = d.xi;
    cogens.insert(cogens.end(), d.m.begin(), d.m.end());
    Report r(witness_cap);
    const std::string rho = "rho(e)f = {{theta13,e},f}", br = "[e1,e2] = {{theta13,e1},e2}",
                      pp = "(a,b)+ = {{theta2,a},b}", dd = "<partial a,b> = {{theta2,a},b}",
                      om = "Omega(e1,e2,e3,e4) = {{{{theta4,e1},e2},e3},e4}";
    for (const auto& n : {rho, br, pp, dd, om})
        r.check(n);
    for (int e : d.gens) {
        Poly q = bracket(c, t13, Poly::variable(e));
        for (std::size_t k = 0; k < d.base.size(); ++k) {
            Poly v = bracket(c, q, d.coord(static_cast<int>(k)));
            r.record(rho, v == get(d.rho, std::make_pair(e, static_cast<int>(k))),
                     c.name(e) + ", " + c.name(d.base[k]) + ": " + to_string(c, v));
        }
        for (int f : d.gens) {
            Poly v = bracket(c, q, Poly::variable(f));
            r.record(br, v == get(d.br, std::make_pair(e, f)), c.name(e) + ", " + c.name(f) + ": " + to_string(c, v));
        }
    }
    for (int a : cogens) {
        Poly q = bracket(c, t2, chart_cosec(a));
        for (int b : cogens) {
            Poly v = bracket(c, q, chart_cosec(b));
            r.record(pp, v == get(d.pp, std::make_pair(a, b)), c.name(a) + ", " + c.name(b) + ": " + to_string(c, v));
            Poly w = d.pairing(d.d(Poly::variable(a)), Poly::variable(b));
            r.record(dd, v == w, c.name(a) + ", " + c.name(b) + ": " + to_string(c, w));
        }
    }
    const int ne = static_cast<int>(d.gens.size());
    for (int p = 0; p < ne; ++p)
        for (int q = p + 1; q < ne; ++q)
            for (int s = q + 1; s < ne; ++s)
                for (int t = s + 1; t < ne; ++t) {
                    std::vector<int> key{d.gens[p], d.gens[q], d.gens[s], d.gens[t]};
                    Poly v = t4;
                    for (int e : key)
                        v = bracket(c, v, Poly::variable(e));
                    r.record(om, v == get(d.omega, key),
                             c.name(key[0]) + ", " + c.name(key[1]) + ", " + c.name(key[2]) + ", " + c.name(key[3]) +
                                 ": " + to_string(c, v));
                }
    return r;
}

InducedTwoTerm induced_two_term(const LInfty& g)
{
    IkedaUchinoData d = iu_from_3term(g);
    const Chart& c = d.chart();
    const GradedSpace& gs = g.space();
    const int n0 = static_cast<int>(d.g0.size()), n1 = static_cast<int>(d.g1.size()),
              n2 = static_cast<int>(d.g2.size());
    InducedTwoTerm R;

    // h0 coordinates: x_a, then f_k alpha^i.
    std::vector<Poly> h0;
    std::vector<std::string> h0_labels;
    for (int a = 0; a < n0; ++a) {
        h0.push_back(Poly::variable(d.x[a]));
        h0_labels.push_back(gs.label(d.g0[a]));
    }
    for (int k = 0; k < n2; ++k)
        for (int i = 0; i < n1; ++i) {
            h0.push_back(mul(c, d.coord(k), Poly::variable(d.alpha[i])));
            h0_labels.push_back(gs.label(d.g2[k]) + "." + gs.label(d.g1[i]) + "*");
        }
    const int N = static_cast<int>(h0.size());
    // coordinates of a section in h0; nothing if it leaves h0
    auto coords = [&](const Poly& s) -> std::optional<std::vector<Scalar>> {
        std::vector<Scalar> v(N);
        for (const auto& [u, f] : d.components(s)) {
            if (int a = index_in(d.x, u); a >= 0) {
                for (const auto& [mono, k] : f.terms) {
                    if (!mono.empty())
                        return std::nullopt;
                    v[a] += k;
                }
            } else if (int i = index_in(d.alpha, u); i >= 0) {
                for (const auto& [mono, k] : f.terms) {
                    int b = mono.size() == 1 && mono[0].second == 1 ? index_in(d.base, mono[0].first) : -1;
                    if (b < 0)
                        return std::nullopt;
                    v[n0 + b * n1 + i] += k;
                }
            } else {
                return std::nullopt;
            }
        }
        return v;
    };

    // ker rho on h0: rho(e)(f_k) is constant plus linear in base coordinates.
    std::map<std::pair<int, Monomial>, int> rows;
    std::vector<std::map<int, Scalar>> cols(N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < n2; ++k)
            for (const auto& [mono, v] : d.anchor(h0[j], d.coord(k)).terms) {
                auto it = rows.emplace(std::make_pair(k, mono), static_cast<int>(rows.size())).first;
                cols[j][it->second] += v;
            }
    Matrix A(rows.size(), std::vector<Scalar>(N));
    for (int j = 0; j < N; ++j)
        for (const auto& [row, v] : cols[j])
            A[row][j] = v;
    const auto kernel = kernel_basis(A, N);

    std::vector<BasisElement> el;
    for (const auto& l : h0_labels)
        el.push_back({l, 0});
    for (std::size_t k = 0; k < kernel.size(); ++k)
        el.push_back({"h" + std::to_string(k + 1), -1});
    GradedSpace space = GradedSpace::from_elements(el);
    LInfty L(space);
    std::vector<int> id0, id1;
    for (int j = 0; j < N; ++j) {
        id0.push_back(space.id(h0_labels[j]));
        R.element[id0.back()] = h0[j];
    }
    for (std::size_t k = 0; k < kernel.size(); ++k) {
        id1.push_back(space.id("h" + std::to_string(k + 1)));
        Poly s;
        for (int j = 0; j < N; ++j)
            if (kernel[k][j] != 0)
                s += h0[j] * kernel[k][j];
        R.element[id1.back()] = s;
    }

    const std::string in_h0 = "l2 stays in h0", in_h1 = "l2(h0,h-1) stays in h-1", l3_in = "l3 lands in h-1";
    for (const auto& n : {in_h0, in_h1, l3_in})
        R.report.check(n);
    Matrix K(N, std::vector<Scalar>(kernel.size()));
    for (std::size_t k = 0; k < kernel.size(); ++k)
        for (int j = 0; j < N; ++j)
            K[j][k] = kernel[k][j];
    auto to_h0 = [&](const Poly& s, const std::string& what) {
        Vec v;
        auto x = coords(s);
        R.report.record(in_h0, x.has_value(), what + " = " + to_string(c, s));
        if (x)
            for (int j = 0; j < N; ++j)
                if ((*x)[j] != 0)
                    v[id0[j]] = (*x)[j];
        return v;
    };
    auto to_h1 = [&](const Poly& s, const std::string& check, const std::string& what) {
        Vec v;
        if (s.is_zero()) {
            R.report.record(check, true);
            return v;
        }
        auto x = coords(s);
        std::optional<std::vector<Scalar>> y;
        if (x)
            y = solve(K, *x, static_cast<int>(kernel.size()));
        R.report.record(check, y.has_value(), what + " = " + to_string(c, s));
        if (y)
            for (std::size_t k = 0; k < y->size(); ++k)
                if ((*y)[k] != 0)
                    v[id1[k]] = (*y)[k];
        return v;
    };

    for (std::size_t k = 0; k < kernel.size(); ++k) {
        Vec v;
        for (int j = 0; j < N; ++j)
            if (kernel[k][j] != 0)
                v[id0[j]] = kernel[k][j];
        L.set({id1[k]}, v);
    }
    for (int p = 0; p < N; ++p) {
        for (int q = p + 1; q < N; ++q)
            L.set({id0[p], id0[q]}, to_h0(d.bracket(h0[p], h0[q]), "[" + h0_labels[p] + ", " + h0_labels[q] + "]"));
        for (std::size_t k = 0; k < kernel.size(); ++k)
            L.set({id0[p], id1[k]}, to_h1(d.bracket(h0[p], R.element[id1[k]]), in_h1,
                                          "[" + h0_labels[p] + ", h" + std::to_string(k + 1) + "]"));
        for (int q = p + 1; q < N; ++q)
            for (int s = q + 1; s < N; ++s)
                L.set({id0[p], id0[q], id0[s]},
                      to_h1(-d.d(d.Omega_contract(h0[p], h0[q], h0[s])), l3_in,
                            "l3(" + h0_labels[p] + ", " + h0_labels[q] + ", " + h0_labels[s] + ")"));
    }
    R.structure = std::move(L);
    return R;
}

}  // namespace lk
