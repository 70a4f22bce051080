#include "linfkit/courant.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace lk {

namespace {

struct Gen {
    bool dual;  // xi^a rather than x_a
    int a;
};

int index_in(const std::vector<int>& v, int x)
{
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

Gen gen_of(const CourantData& cd, int var)
{
    if (int a = index_in(cd.x, var); a >= 0)
        return {false, a};
    if (int a = index_in(cd.xi, var); a >= 0)
        return {true, a};
    throw std::invalid_argument("variable " + cd.chart().name(var) + " is not a generator section");
}

// Section -> generator variable -> coefficient function.
std::map<int, Poly> split(const CourantData& cd, const Poly& e)
{
    std::map<int, Poly> r;
    for (const auto& [m, c] : e.terms) {
        int gen = -1;
        Monomial rest;
        for (const auto& [v, k] : m) {
            if (cd.chart().degree(v) == 0) {
                rest.emplace_back(v, k);
            } else if (gen < 0 && k == 1 && cd.chart().degree(v) == 1) {
                gen = v;
            } else {
                throw std::invalid_argument("not a section: " + to_string(cd.chart(), m));
            }
        }
        if (gen < 0)
            throw std::invalid_argument("not a section: " + to_string(cd.chart(), m));
        gen_of(cd, gen);
        r[gen].add_term(rest, c);
    }
    return r;
}

Poly gen_poly(const CourantData& cd, Gen g)
{
    return g.dual ? cd.gen_xi(g.a) : cd.gen_x(g.a);
}

// Linear function sum_j v[m_j] m_j.
Poly linear_function(const CourantData& cd, const Vec& v)
{
    Poly r;
    for (const auto& [id, c] : v) {
        int i = index_in(cd.g1, id);
        if (i < 0)
            throw std::logic_error("value outside g-1");
        r += cd.coord(i) * c;
    }
    return r;
}

Scalar at(const Vec& v, int id)
{
    auto it = v.find(id);
    return it == v.end() ? Scalar(0) : it->second;
}

// rho(gen)(m_i).
Poly vector_field(const CourantData& cd, Gen g, int i)
{
    if (!g.dual)
        return linear_function(cd, cd.g.eval({cd.g0[g.a], cd.g1[i]}));
    return Poly::constant(at(cd.g.eval({cd.g1[i]}), cd.g0[g.a]));
}

Poly anchor_gen(const CourantData& cd, Gen g, const Poly& f)
{
    Poly r;
    for (std::size_t i = 0; i < cd.base.size(); ++i) {
        Poly df = right_derivative(cd.chart(), cd.base[i], f);
        if (df.is_zero())
            continue;
        r += mul(cd.chart(), df, vector_field(cd, g, static_cast<int>(i)));
    }
    return r;
}

Poly dorfman_gen(const CourantData& cd, Gen e, Gen f)
{
    const LInfty& L = cd.g;
    Poly r;
    if (!e.dual && !f.dual) {
        const int x = cd.g0[e.a], y = cd.g0[f.a];
        for (const auto& [o, c] : L.eval({x, y})) {
            int b = index_in(cd.g0, o);
            r += cd.gen_x(b) * c;
        }
        for (std::size_t c = 0; c < cd.g0.size(); ++c) {
            Poly lin = linear_function(cd, L.eval({x, y, cd.g0[c]}));
            if (!lin.is_zero())
                r += mul(cd.chart(), lin, cd.gen_xi(static_cast<int>(c)));
        }
        return r;
    }
    if (!e.dual && f.dual) {
        for (std::size_t b = 0; b < cd.g0.size(); ++b) {
            Scalar c = at(L.eval({cd.g0[e.a], cd.g0[b]}), cd.g0[f.a]);
            if (c != 0)
                r -= cd.gen_xi(static_cast<int>(b)) * c;
        }
        return r;
    }
    if (e.dual && !f.dual)
        return -dorfman_gen(cd, f, e);
    return r;
}

}  // namespace

std::map<int, Poly> CourantData::components(const Poly& e) const
{
    return split(*this, e);
}

Poly CourantData::anchor(const Poly& e, const Poly& f) const
{
    Poly r;
    for (const auto& [v, h] : split(*this, e))
        r += mul(chart(), h, anchor_gen(*this, gen_of(*this, v), f));
    return r;
}

Poly CourantData::pairing(const Poly& e1, const Poly& e2) const
{
    auto s = split(*this, e1), t = split(*this, e2);
    Poly r;
    for (const auto& [v, h] : s) {
        Gen g = gen_of(*this, v);
        Gen dual{!g.dual, g.a};
        auto it = t.find(dual.dual ? xi[g.a] : x[g.a]);
        if (it != t.end())
            r += mul(chart(), h, it->second);
    }
    return r;
}

Poly CourantData::D(const Poly& f) const
{
    Poly r;
    for (std::size_t a = 0; a < g0.size(); ++a) {
        int i = static_cast<int>(a);
        r += mul(chart(), anchor_gen(*this, {false, i}, f), gen_xi(i));
        r += mul(chart(), anchor_gen(*this, {true, i}, f), gen_x(i));
    }
    return r;
}

Poly CourantData::dorfman(const Poly& e1, const Poly& e2) const
{
    const Chart& c = chart();
    auto s = split(*this, e1), t = split(*this, e2);
    Poly r;
    for (const auto& [v1, f] : s) {
        Gen a = gen_of(*this, v1);
        Poly ea = gen_poly(*this, a);
        Poly Df;
        bool have_df = false;
        for (const auto& [v2, g] : t) {
            Gen b = gen_of(*this, v2);
            Poly eb = gen_poly(*this, b);
            r += mul(c, mul(c, f, g), dorfman_gen(*this, a, b));
            r += mul(c, mul(c, f, anchor_gen(*this, a, g)), eb);
            r -= mul(c, mul(c, g, anchor_gen(*this, b, f)), ea);
            if (a.a == b.a && a.dual != b.dual) {
                if (!have_df) {
                    Df = D(f);
                    have_df = true;
                }
                r += mul(c, g, Df);
            }
        }
    }
    return r;
}

Poly CourantData::courant(const Poly& e1, const Poly& e2) const
{
    return (dorfman(e1, e2) - dorfman(e2, e1)) * Scalar(1, 2);
}

Poly CourantData::T(const Poly& e1, const Poly& e2, const Poly& e3) const
{
    Poly r = pairing(courant(e1, e2), e3) + pairing(courant(e2, e3), e1) + pairing(courant(e3, e1), e2);
    return r * Scalar(1, 6);
}

Poly CourantData::jacobiator(const Poly& e1, const Poly& e2, const Poly& e3) const
{
    return courant(courant(e1, e2), e3) + courant(courant(e2, e3), e1) + courant(courant(e3, e1), e2);
}

std::vector<Poly> CourantData::sample_functions(int cap) const
{
    std::vector<Poly> r{Poly::constant(1)};
    std::vector<std::vector<int>> layer{{}};
    for (int d = 1; d <= cap; ++d) {
        std::vector<std::vector<int>> next;
        for (const auto& m : layer) {
            int from = m.empty() ? 0 : m.back();
            for (int i = from; i < static_cast<int>(base.size()); ++i) {
                auto n = m;
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

std::vector<Poly> CourantData::sample_sections(int cap) const
{
    std::vector<Poly> r;
    auto funs = sample_functions(cap);
    for (std::size_t a = 0; a < g0.size(); ++a)
        for (int dual = 0; dual < 2; ++dual) {
            Poly e = gen_poly(*this, {dual == 1, static_cast<int>(a)});
            for (const auto& f : funs)
                r.push_back(mul(chart(), f, e));
        }
    return r;
}

CourantData courant_from_2term(const LInfty& g)
{
    if (!is_two_term(g))
        throw std::invalid_argument("the Courant algebroid needs a 2-term algebra");
    CourantData cd;
    cd.g = g;
    cd.enc = hamiltonian_encode(g, 2);
    cd.g0 = g.space().ids_of_degree(0);
    cd.g1 = g.space().ids_of_degree(-1);
    for (int id : cd.g1)
        cd.base.push_back(cd.enc.position[id]);
    for (int id : cd.g0) {
        cd.x.push_back(cd.enc.position[id]);
        cd.xi.push_back(cd.enc.momentum[id]);
    }
    return cd;
}

Report verify_courant_axioms(const CourantData& cd, int cap, std::size_t witness_cap)
{
    const Chart& c = cd.chart();
    const auto secs = cd.sample_sections(cap);
    const auto funs = cd.sample_functions(cap);
    const std::string polar = "e1 o e2 + e2 o e1 = D<e1,e2>";
    const std::string anchor = "<e,Df> = rho(e)f";
    const std::string invariance = "rho(e1)<e2,e3> = <e1 o e2,e3> + <e2,e1 o e3>";
    const std::string leibniz = "e1 o (e2 o e3) = (e1 o e2) o e3 + e2 o (e1 o e3)";
    const std::string jacobi = "[[e1,e2],e3] + c.p. = D T(e1,e2,e3)";
    Report r = detail::parallel_checks(secs.size(), witness_cap, [&](std::size_t i, Report& rep) {
        rep.check(polar);
        rep.check(anchor);
        rep.check(invariance);
        rep.check(leibniz);
        rep.check(jacobi);
        const Poly& e1 = secs[i];
        auto name = [&](const Poly& e) { return to_string(c, e); };
        for (const auto& f : funs) {
            Poly d = cd.pairing(e1, cd.D(f)) - cd.anchor(e1, f);
            rep.record(anchor, d.is_zero(), "e=" + name(e1) + " f=" + to_string(c, f));
        }
        for (const auto& e2 : secs) {
            Poly d = cd.dorfman(e1, e2) + cd.dorfman(e2, e1) - cd.D(cd.pairing(e1, e2));
            rep.record(polar, d.is_zero(), "e1=" + name(e1) + " e2=" + name(e2) + " defect " + to_string(c, d));
            Poly e12 = cd.dorfman(e1, e2);
            for (const auto& e3 : secs) {
                auto w = [&](const Poly& d) {
                    return "e1=" + name(e1) + " e2=" + name(e2) + " e3=" + name(e3) + " defect " + to_string(c, d);
                };
                Poly e13 = cd.dorfman(e1, e3);
                Poly inv = cd.anchor(e1, cd.pairing(e2, e3)) - cd.pairing(e12, e3) - cd.pairing(e2, e13);
                rep.record(invariance, inv.is_zero(), inv.is_zero() ? std::string() : w(inv));
                Poly lb = cd.dorfman(e1, cd.dorfman(e2, e3)) - cd.dorfman(e12, e3) - cd.dorfman(e2, e13);
                rep.record(leibniz, lb.is_zero(), lb.is_zero() ? std::string() : w(lb));
                Poly jt = cd.jacobiator(e1, e2, e3) - cd.D(cd.T(e1, e2, e3));
                rep.record(jacobi, jt.is_zero(), jt.is_zero() ? std::string() : w(jt));
            }
        }
    });
    return r;
}

Report check_derived_route(const CourantData& cd, int cap, std::size_t witness_cap)
{
    const Chart& c = cd.chart();
    const Poly theta = cd.theta();
    const auto secs = cd.sample_sections(cap);
    const auto funs = cd.sample_functions(cap + 1);
    Report r(witness_cap);
    const std::string dorf = "e1 o e2 = {{e1,Theta},e2}";
    const std::string pair = "<e1,e2> = {e1,e2}";
    const std::string rho = "rho(e)f = {{e,Theta},f}";
    const std::string d = "Df = {Theta,f}";
    for (const auto& n : {dorf, pair, rho, d})
        r.check(n);
    for (const auto& e1 : secs) {
        Poly q = bracket(c, e1, theta);
        for (const auto& e2 : secs) {
            std::string w = "e1=" + to_string(c, e1) + " e2=" + to_string(c, e2);
            r.record(dorf, cd.dorfman(e1, e2) == bracket(c, q, e2), w);
            r.record(pair, cd.pairing(e1, e2) == bracket(c, e1, e2), w);
        }
        for (const auto& f : funs)
            r.record(rho, cd.anchor(e1, f) == bracket(c, q, f), "e=" + to_string(c, e1) + " f=" + to_string(c, f));
    }
    for (const auto& f : funs)
        r.record(d, cd.D(f) == bracket(c, theta, f), "f=" + to_string(c, f));
    return r;
}

std::string tensor_label(const std::string& a, const std::string& m)
{
    return a + "*." + m;
}

GradedSpace new_two_term_space(const LInfty& g)
{
    if (!is_two_term(g))
        throw std::invalid_argument("g~ needs a 2-term algebra");
    const GradedSpace& s = g.space();
    std::vector<BasisElement> el;
    for (int a : s.ids_of_degree(0)) {
        el.push_back({s.label(a), 0});
        for (int m : s.ids_of_degree(-1))
            el.push_back({tensor_label(s.label(a), s.label(m)), 0});
    }
    for (int m : s.ids_of_degree(-1))
        el.push_back({s.label(m), -1});
    return GradedSpace::from_elements(std::move(el));
}

LInfty twoterm_from_courant(const CourantData& cd)
{
    const GradedSpace S = new_two_term_space(cd.g);
    const GradedSpace& gs = cd.g.space();
    const Chart& c = cd.chart();
    LInfty N(S);
    std::map<int, Poly> section;
    for (std::size_t a = 0; a < cd.g0.size(); ++a) {
        const std::string& la = gs.label(cd.g0[a]);
        section[S.id(la)] = cd.gen_x(static_cast<int>(a));
        for (std::size_t i = 0; i < cd.g1.size(); ++i)
            section[S.id(tensor_label(la, gs.label(cd.g1[i])))] =
                mul(c, cd.coord(static_cast<int>(i)), cd.gen_xi(static_cast<int>(a)));
    }
    auto linear = [&](const Poly& f) {
        Vec v;
        for (const auto& [m, k] : f.terms) {
            int i = m.size() == 1 && m[0].second == 1 ? index_in(cd.base, m[0].first) : -1;
            if (i < 0)
                throw std::logic_error("function leaves the linear slice: " + to_string(c, f));
            v[S.id(gs.label(cd.g1[i]))] += k;
        }
        return v;
    };
    auto from_section = [&](const Poly& e) {
        Vec v;
        for (const auto& [var, h] : split(cd, e)) {
            Gen g = gen_of(cd, var);
            const std::string& la = gs.label(cd.g0[g.a]);
            if (!g.dual) {
                if (h.size() > 1 || (h.size() == 1 && !h.terms.begin()->first.empty()))
                    throw std::logic_error("section leaves the linear slice: " + to_string(c, e));
                if (!h.is_zero())
                    v[S.id(la)] += h.terms.begin()->second;
                continue;
            }
            for (const auto& [id, k] : linear(h))
                v[S.id(tensor_label(la, S.label(id)))] += k;
        }
        return v;
    };
    const auto deg0 = S.ids_of_degree(0);
    const auto deg1 = S.ids_of_degree(-1);
    for (int m : deg1) {
        int i = index_in(cd.g1, gs.id(S.label(m)));
        N.set({m}, from_section(cd.D(cd.coord(i))));
    }
    for (std::size_t p = 0; p < deg0.size(); ++p) {
        const Poly& e = section[deg0[p]];
        for (std::size_t q = p + 1; q < deg0.size(); ++q)
            N.set({deg0[p], deg0[q]}, from_section(cd.courant(e, section[deg0[q]])));
        for (int m : deg1) {
            int i = index_in(cd.g1, gs.id(S.label(m)));
            N.set({deg0[p], m}, scaled(linear(cd.anchor(e, cd.coord(i))), Scalar(1, 2)));
        }
        for (std::size_t q = p + 1; q < deg0.size(); ++q)
            for (std::size_t s = q + 1; s < deg0.size(); ++s)
                N.set({deg0[p], deg0[q], deg0[s]},
                      scaled(linear(cd.T(e, section[deg0[q]], section[deg0[s]])), Scalar(-1)));
    }
    return N;
}

namespace {

// Element of g~0: x_a or xi^a (x) m_i (indices into g0, g1).
struct Elem {
    bool tensor;
    int a;
    int i;
};

}  // namespace

LInfty new_two_term(const LInfty& g)
{
    const GradedSpace S = new_two_term_space(g);
    const GradedSpace& gs = g.space();
    const auto g0 = gs.ids_of_degree(0);
    const auto g1 = gs.ids_of_degree(-1);
    LInfty N(S);

    auto lift = [&](const Vec& v) {
        Vec r;
        for (const auto& [id, c] : v)
            r[S.id(gs.label(id))] += c;
        return r;
    };
    auto tid = [&](int a, int i) { return S.id(tensor_label(gs.label(g0[a]), gs.label(g1[i]))); };
    // xi^a (x) v for v in g-1.
    auto tens = [&](int a, const Vec& v) {
        Vec r;
        for (const auto& [id, c] : v)
            r[tid(a, index_in(g1, id))] += c;
        return r;
    };
    auto mvec = [&](int i) { return basis_vec(S.id(gs.label(g1[i]))); };
    auto l1 = [&](int i) { return g.eval({g1[i]}); };
    auto l20 = [&](int a, int b) { return g.eval({g0[a], g0[b]}); };
    auto l21 = [&](int a, int i) { return g.eval({g0[a], g1[i]}); };
    auto l3 = [&](int a, int b, int c) { return g.eval({g0[a], g0[b], g0[c]}); };
    const int d0 = static_cast<int>(g0.size()), d1 = static_cast<int>(g1.size());

    auto Dm = [&](int i) {
        Vec r = lift(l1(i));
        for (int a = 0; a < d0; ++a)
            axpy(r, 1, tens(a, l21(a, i)));
        return r;
    };
    std::vector<Elem> elems;
    for (int a = 0; a < d0; ++a) {
        elems.push_back({false, a, -1});
        for (int i = 0; i < d1; ++i)
            elems.push_back({true, a, i});
    }
    auto id_of = [&](const Elem& e) { return e.tensor ? tid(e.a, e.i) : S.id(gs.label(g0[e.a])); };

    std::function<Vec(const Elem&, const Elem&)> cour = [&](const Elem& e, const Elem& f) -> Vec {
        if (!e.tensor && !f.tensor) {
            Vec r = lift(l20(e.a, f.a));
            for (int a = 0; a < d0; ++a)
                axpy(r, 1, tens(a, l3(e.a, f.a, a)));
            return r;
        }
        if (!e.tensor) {
            Vec r = tens(f.a, l21(e.a, f.i));
            for (int b = 0; b < d0; ++b) {
                Scalar c = at(l20(e.a, b), g0[f.a]);
                if (c != 0)
                    axpy(r, -c, basis_vec(tid(b, f.i)));
            }
            if (f.a == e.a)
                axpy(r, Scalar(-1, 2), Dm(f.i));
            return r;
        }
        if (!f.tensor)
            return scaled(cour(f, e), Scalar(-1));
        Vec r;
        axpy(r, -at(l1(e.i), g0[f.a]), basis_vec(tid(e.a, f.i)));
        axpy(r, at(l1(f.i), g0[e.a]), basis_vec(tid(f.a, e.i)));
        return r;
    };

    for (int i = 0; i < d1; ++i)
        N.set({S.id(gs.label(g1[i]))}, Dm(i));
    for (std::size_t p = 0; p < elems.size(); ++p) {
        for (std::size_t q = p + 1; q < elems.size(); ++q)
            N.set({id_of(elems[p]), id_of(elems[q])}, cour(elems[p], elems[q]));
        const Elem& e = elems[p];
        for (int n = 0; n < d1; ++n) {
            Vec v = e.tensor ? scaled(mvec(e.i), at(l1(n), g0[e.a]) * Scalar(1, 2))
                             : scaled(lift(l21(e.a, n)), Scalar(1, 2));
            N.set({id_of(e), S.id(gs.label(g1[n]))}, v);
        }
    }

    auto l3t = [&](const Elem* E[3]) {
        Vec r;
        auto isx = [&](int k) { return !E[k]->tensor; };
        // <xi_i, x_j>
        auto pr = [&](int i, int j) { return E[i]->tensor && isx(j) && E[i]->a == E[j]->a ? 1 : 0; };
        // <xi_i, l1 m_j>
        auto xil1 = [&](int i, int j) {
            return E[i]->tensor && E[j]->tensor ? at(l1(E[j]->i), g0[E[i]->a]) : Scalar(0);
        };
        auto l21v = [&](int i, int j) { return isx(i) && E[j]->tensor ? l21(E[i]->a, E[j]->i) : Vec{}; };
        if (isx(0) && isx(1) && isx(2))
            axpy(r, Scalar(-1, 2), lift(l3(E[0]->a, E[1]->a, E[2]->a)));
        const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        for (const auto& t : cyc) {
            int i = t[0], j = t[1], k = t[2];
            if (isx(i) && isx(j) && E[k]->tensor)
                axpy(r, Scalar(-1, 2) * at(l20(E[i]->a, E[j]->a), g0[E[k]->a]), mvec(E[k]->i));
            if (E[k]->tensor) {
                axpy(r, Scalar(-1, 4) * pr(i, j) * xil1(k, i), mvec(E[k]->i));
                axpy(r, Scalar(1, 4) * pr(j, i) * xil1(k, j), mvec(E[k]->i));
            }
            axpy(r, Scalar(-pr(j, k)) * Scalar(1, 4), lift(l21v(i, j)));
            axpy(r, Scalar(pr(k, j)) * Scalar(1, 4), lift(l21v(i, k)));
        }
        return r;
    };
    for (std::size_t p = 0; p < elems.size(); ++p)
        for (std::size_t q = p + 1; q < elems.size(); ++q)
            for (std::size_t s = q + 1; s < elems.size(); ++s) {
                const Elem* E[3] = {&elems[p], &elems[q], &elems[s]};
                N.set({id_of(elems[p]), id_of(elems[q]), id_of(elems[s])}, l3t(E));
            }
    return N;
}

TwoTermMorphism canonical_morphism(const LInfty& g)
{
    const GradedSpace S = new_two_term_space(g);
    const GradedSpace& gs = g.space();
    const auto g0 = gs.ids_of_degree(0);
    const auto g1 = gs.ids_of_degree(-1);
    TwoTermMorphism F;
    for (int a : g0)
        F.F0[S.id(gs.label(a))] = basis_vec(a);
    for (int m : g1)
        F.F1[S.id(gs.label(m))] = basis_vec(m);
    // F2(xi^a (x) m, x_a) = 1/2 m; F2(x, .) = -F2(., x) gives the other half.
    for (int a : g0)
        for (int m : g1)
            F.set_f2(S.id(tensor_label(gs.label(a), gs.label(m))), S.id(gs.label(a)), scaled(basis_vec(m), Scalar(1, 2)));
    return F;
}

}  // namespace lk
