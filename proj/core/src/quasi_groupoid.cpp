#include "linfkit/quasi_groupoid.hpp"

#include "linfkit/linalg.hpp"
#include "parallel.hpp"

#include <algorithm>
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

Poly base_linear(const CourantData& cd, const Vec& v)
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

bool contains_any(const Monomial& m, const std::vector<int>& vars)
{
    for (const auto& [v, e] : m)
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
            return true;
    return false;
}

int poly_degree(const Poly& f)
{
    int d = -1;
    for (const auto& [m, c] : f.terms) {
        int k = 0;
        for (const auto& [v, e] : m)
            k += e;
        d = std::max(d, k);
    }
    return d;
}

}  // namespace

Poly LieQuasiBialgebroidData::a_part(const Poly& e) const
{
    return filter(e, [&](const Monomial& m) { return contains_any(m, cd.xi); });
}

Poly LieQuasiBialgebroidData::astar_part(const Poly& e) const
{
    return filter(e, [&](const Monomial& m) { return contains_any(m, cd.x); });
}

Poly LieQuasiBialgebroidData::anchor_A(const Poly& a, const Poly& f) const
{
    if (!astar_part(a).is_zero())
        throw std::invalid_argument("not a section of A");
    return cd.anchor(a, f);
}

Poly LieQuasiBialgebroidData::anchor_Astar(const Poly& s, const Poly& f) const
{
    if (!a_part(s).is_zero())
        throw std::invalid_argument("not a section of A*");
    return cd.anchor(s, f);
}

Poly LieQuasiBialgebroidData::bracket_A(const Poly& a, const Poly& b) const
{
    if (!astar_part(a).is_zero() || !astar_part(b).is_zero())
        throw std::invalid_argument("not a section of A");
    const Chart& c = cd.chart();
    Poly r;
    for (const auto& [u, f] : cd.components(a))
        for (const auto& [v, g] : cd.components(b)) {
            Poly eu = Poly::variable(u), ev = Poly::variable(v);
            r += mul(c, mul(c, f, cd.anchor(eu, g)), ev);
            r -= mul(c, mul(c, g, cd.anchor(ev, f)), eu);
        }
    return r;
}

Poly LieQuasiBialgebroidData::bracket_Astar(const Poly& s, const Poly& t) const
{
    if (!a_part(s).is_zero() || !a_part(t).is_zero())
        throw std::invalid_argument("not a section of A*");
    const Chart& c = cd.chart();
    Poly r;
    for (const auto& [u, f] : cd.components(s))
        for (const auto& [v, g] : cd.components(t)) {
            int a = index_in(cd.x, u), b = index_in(cd.x, v);
            Poly eu = Poly::variable(u), ev = Poly::variable(v);
            Poly br;
            for (const auto& [o, k] : cd.g.eval({cd.g0[a], cd.g0[b]}))
                br += cd.gen_x(index_in(cd.g0, o)) * k;
            r += mul(c, mul(c, f, g), br);
            r += mul(c, mul(c, f, cd.anchor(eu, g)), ev);
            r -= mul(c, mul(c, g, cd.anchor(ev, f)), eu);
        }
    return r;
}

Poly LieQuasiBialgebroidData::d_A(const Poly& f) const
{
    Poly r;
    for (std::size_t a = 0; a < cd.g0.size(); ++a) {
        int i = static_cast<int>(a);
        r += mul(cd.chart(), cd.anchor(cd.gen_xi(i), f), cd.gen_x(i));
    }
    return r;
}

std::map<std::pair<int, int>, Poly> LieQuasiBialgebroidData::d_A_section(const Poly& s) const
{
    std::map<std::pair<int, int>, Poly> r;
    const int d0 = static_cast<int>(cd.g0.size());
    for (int a = 0; a < d0; ++a)
        for (int b = a + 1; b < d0; ++b) {
            Poly v = cd.anchor(cd.gen_xi(a), cd.pairing(s, cd.gen_xi(b))) -
                     cd.anchor(cd.gen_xi(b), cd.pairing(s, cd.gen_xi(a)));
            if (!v.is_zero())
                r[{a, b}] = v;
        }
    return r;
}

Poly LieQuasiBialgebroidData::phi_eval(const Poly& s, const Poly& t, const Poly& u) const
{
    const Chart& c = cd.chart();
    auto S = cd.components(s), T = cd.components(t), U = cd.components(u);
    Poly r;
    for (const auto& [v1, f] : S)
        for (const auto& [v2, g] : T)
            for (const auto& [v3, h] : U) {
                int a = index_in(cd.x, v1), b = index_in(cd.x, v2), e = index_in(cd.x, v3);
                if (a < 0 || b < 0 || e < 0)
                    throw std::invalid_argument("not a section of A*");
                Poly l = base_linear(cd, cd.g.eval({cd.g0[a], cd.g0[b], cd.g0[e]}));
                if (!l.is_zero())
                    r -= mul(c, mul(c, mul(c, f, g), h), l);
            }
    return r;
}

LieQuasiBialgebroidData split_quasi_bialgebroid(const LInfty& g)
{
    LieQuasiBialgebroidData B;
    B.cd = courant_from_2term(g);
    const Chart& c = B.cd.chart();
    Poly theta = B.cd.theta();
    auto part = [&](int k) { return filter(theta, [&](const Monomial& m) { return momentum_order(c, m) == k; }); };
    B.mu = part(1);
    B.gamma = part(2);
    B.phi = part(3);
    if (!(B.mu + B.gamma + B.phi == theta))
        throw std::logic_error("Theta has components of arity above 3");
    return B;
}

Report verify_quasi_bialgebroid(const LieQuasiBialgebroidData& B, std::size_t witness_cap)
{
    const CourantData& cd = B.cd;
    const Chart& c = cd.chart();
    Report r(witness_cap);
    auto eq = [&](const std::string& name, const Poly& p) { r.record(name, p.is_zero(), to_string(c, p)); };
    eq("{mu,mu} = 0", bracket(c, B.mu, B.mu));
    eq("{mu,gamma} = 0", bracket(c, B.mu, B.gamma));
    eq("1/2{gamma,gamma} + {mu,phi} = 0", bracket(c, B.gamma, B.gamma) * Scalar(1, 2) + bracket(c, B.mu, B.phi));
    eq("{gamma,phi} = 0", bracket(c, B.gamma, B.phi));

    const std::string dx = "d_A x = 0";
    const std::string cj = "[[x,y]_A*,z]_A* + c.p. = d_A phi(x,y,z)";
    r.check(dx);
    r.check(cj);
    const int d0 = static_cast<int>(cd.g0.size());
    for (int a = 0; a < d0; ++a)
        r.record(dx, B.d_A_section(cd.gen_x(a)).empty(), to_string(c, cd.gen_x(a)));
    for (int a = 0; a < d0; ++a)
        for (int b = a + 1; b < d0; ++b)
            for (int e = b + 1; e < d0; ++e) {
                Poly x = cd.gen_x(a), y = cd.gen_x(b), z = cd.gen_x(e);
                Poly lhs = B.bracket_Astar(B.bracket_Astar(x, y), z) + B.bracket_Astar(B.bracket_Astar(y, z), x) +
                           B.bracket_Astar(B.bracket_Astar(z, x), y);
                Poly d = lhs - B.d_A(B.phi_eval(x, y, z));
                r.record(cj, d.is_zero(),
                         "(" + to_string(c, x) + ", " + to_string(c, y) + ", " + to_string(c, z) + ") defect " +
                             to_string(c, d));
            }
    return r;
}

namespace {

// Degree-w slice of Ker(d_A): ambient basis mono * x_a and a kernel basis.
struct KernelSlice {
    std::vector<std::pair<int, Monomial>> ambient;  // (a, coefficient monomial)
    std::map<std::pair<int, Monomial>, int> index;
    std::vector<std::vector<Scalar>> kernel;
    std::vector<int> ids;
};

std::vector<Monomial> monomials_of_degree(const CourantData& cd, int w)
{
    std::vector<Monomial> r;
    for (const auto& f : cd.sample_functions(w)) {
        const Monomial& m = f.terms.begin()->first;
        int d = 0;
        for (const auto& [v, e] : m)
            d += e;
        if (d == w)
            r.push_back(m);
    }
    return r;
}

}  // namespace

KerdTwoTerm kerd_two_term(const LieQuasiBialgebroidData& B, int cap)
{
    if (cap < 0)
        throw std::invalid_argument("negative slice cap");
    const CourantData& cd = B.cd;
    const Chart& c = cd.chart();
    const GradedSpace& gs = cd.g.space();
    const int d0 = static_cast<int>(cd.g0.size());
    KerdTwoTerm K;

    std::vector<KernelSlice> slices(cap + 1);
    std::vector<BasisElement> el;
    std::vector<Poly> sections;  // in label order below
    std::vector<std::string> labels;
    int next_k = 1;
    for (int w = 0; w <= cap; ++w) {
        KernelSlice& S = slices[w];
        for (int a = 0; a < d0; ++a)
            for (const auto& m : monomials_of_degree(cd, w)) {
                S.index[{a, m}] = static_cast<int>(S.ambient.size());
                S.ambient.emplace_back(a, m);
            }
        const int n = static_cast<int>(S.ambient.size());
        std::map<std::pair<std::pair<int, int>, Monomial>, int> rows;
        std::vector<std::map<int, Scalar>> cols(n);
        for (int j = 0; j < n; ++j) {
            Poly s;
            s.add_term(S.ambient[j].second, 1);
            s = mul(c, s, cd.gen_x(S.ambient[j].first));
            for (const auto& [pair, f] : B.d_A_section(s))
                for (const auto& [m, k] : f.terms) {
                    auto key = std::make_pair(pair, m);
                    auto it = rows.emplace(key, static_cast<int>(rows.size())).first;
                    cols[j][it->second] += k;
                }
        }
        Matrix A(rows.size(), std::vector<Scalar>(n));
        for (int j = 0; j < n; ++j)
            for (const auto& [row, k] : cols[j])
                A[row][j] = k;
        S.kernel = n ? kernel_basis(A, n) : std::vector<std::vector<Scalar>>{};
        if (w == 0) {
            // constants: keep the unit vectors and the labels of g0
            S.kernel.clear();
            for (int a = 0; a < d0; ++a) {
                std::vector<Scalar> v(n);
                v[S.index.at({a, Monomial{}})] = 1;
                S.kernel.push_back(v);
            }
        }
        K.report.record("kernel generators", true);
        if (S.kernel.empty())
            K.report.note("kernel generators", "no kernel generators of weight " + std::to_string(w));
        for (const auto& v : S.kernel) {
            Poly s;
            for (int j = 0; j < n; ++j)
                if (v[j] != 0) {
                    Poly t;
                    t.add_term(S.ambient[j].second, v[j]);
                    s += mul(c, t, cd.gen_x(S.ambient[j].first));
                }
            std::string label;
            if (w > 0)
                label = "k" + std::to_string(next_k++);
            else
                for (int j = 0; j < n; ++j)
                    if (v[j] != 0)
                        label = gs.label(cd.g0[S.ambient[j].first]);
            labels.push_back(label);
            sections.push_back(s);
            el.push_back({label, 0});
        }
    }
    std::vector<Poly> functions;
    std::vector<std::string> flabels;
    for (const auto& f : cd.sample_functions(cap + 1)) {
        if (poly_degree(f) == 0)
            continue;
        flabels.push_back(to_string(c, f.terms.begin()->first));
        functions.push_back(f);
        el.push_back({flabels.back(), -1});
    }
    GradedSpace space = GradedSpace::from_elements(el);
    LInfty L(space);
    for (std::size_t i = 0; i < labels.size(); ++i)
        K.element[space.id(labels[i])] = sections[i];
    for (std::size_t i = 0; i < flabels.size(); ++i)
        K.element[space.id(flabels[i])] = functions[i];
    {
        std::size_t i = 0;
        for (int w = 0; w <= cap; ++w)
            for (std::size_t k = 0; k < slices[w].kernel.size(); ++k, ++i)
                slices[w].ids.push_back(space.id(labels[i]));
    }

    const std::string closure = "brackets stay in Ker(d_A)";
    K.report.check(closure);
    auto express_function = [&](const Poly& f) {
        Vec v;
        for (const auto& [m, k] : f.terms) {
            int d = 0;
            for (const auto& [var, e] : m)
                d += e;
            if (d > cap + 1)
                continue;
            auto id = space.find(to_string(c, m));
            if (d == 0 || !id) {
                K.report.record(closure, false, "constant function " + to_string(c, f));
                continue;
            }
            v[*id] += k;
        }
        return v;
    };
    auto express_section = [&](const Poly& s) {
        Vec v;
        std::map<int, std::vector<Scalar>> by_weight;
        for (const auto& [var, f] : cd.components(s)) {
            int a = index_in(cd.x, var);
            if (a < 0) {
                K.report.record(closure, false, "A-component in " + to_string(c, s));
                return v;
            }
            for (const auto& [m, k] : f.terms) {
                int w = 0;
                for (const auto& [u, e] : m)
                    w += e;
                if (w > cap)
                    continue;
                auto& b = by_weight[w];
                b.resize(slices[w].ambient.size());
                b[slices[w].index.at({a, m})] += k;
            }
        }
        for (const auto& [w, b] : by_weight) {
            const KernelSlice& S = slices[w];
            const int n = static_cast<int>(S.ambient.size());
            Matrix A(n, std::vector<Scalar>(S.kernel.size()));
            for (std::size_t k = 0; k < S.kernel.size(); ++k)
                for (int j = 0; j < n; ++j)
                    A[j][k] = S.kernel[k][j];
            auto x = solve(A, b, static_cast<int>(S.kernel.size()));
            K.report.record(closure, x.has_value(), to_string(c, s));
            if (!x)
                continue;
            for (std::size_t k = 0; k < x->size(); ++k)
                if ((*x)[k] != 0)
                    v[S.ids[k]] += (*x)[k];
        }
        return v;
    };

    const auto deg0 = space.ids_of_degree(0);
    const auto deg1 = space.ids_of_degree(-1);
    for (int m : deg1)
        L.set({m}, express_section(B.d_A(K.element.at(m))));
    for (std::size_t p = 0; p < deg0.size(); ++p) {
        const Poly& e = K.element.at(deg0[p]);
        for (std::size_t q = p + 1; q < deg0.size(); ++q)
            L.set({deg0[p], deg0[q]}, express_section(B.bracket_Astar(e, K.element.at(deg0[q]))));
        for (int m : deg1)
            L.set({deg0[p], m}, express_function(B.anchor_Astar(e, K.element.at(m))));
        for (std::size_t q = p + 1; q < deg0.size(); ++q)
            for (std::size_t s = q + 1; s < deg0.size(); ++s)
                L.set({deg0[p], deg0[q], deg0[s]},
                      express_function(-B.phi_eval(e, K.element.at(deg0[q]), K.element.at(deg0[s]))));
    }
    K.structure = std::move(L);
    return K;
}

Report verify_kerd_morphism(const LieQuasiBialgebroidData& B, const KerdTwoTerm& K, int cap, std::size_t witness_cap)
{
    const CourantData& cd = B.cd;
    const Chart& c = cd.chart();
    std::vector<Poly> secs, funs;
    for (const auto& f : cd.sample_functions(cap))
        for (std::size_t a = 0; a < cd.g0.size(); ++a)
            secs.push_back(mul(c, f, cd.gen_xi(static_cast<int>(a))));
    for (const auto& [id, e] : K.element)
        (K.structure.space().degree(id) == 0 ? secs : funs).push_back(e);

    auto F0 = [&](const Poly& e) { return B.astar_part(e); };
    auto F2 = [&](const Poly& e1, const Poly& e2) {
        return (cd.pairing(B.a_part(e1), B.astar_part(e2)) - cd.pairing(B.a_part(e2), B.astar_part(e1))) *
               Scalar(1, 2);
    };
    const std::string c1 = "(i) F0 l1 = l1' F1", c2 = "(ii) F0 l2(x,y) - l2'(F0x,F0y) = l1' F2(x,y)",
                      c3 = "(iii) F1 l2(x,m) - l2'(F0x,F1m) = F2(x,l1 m)",
                      c4 = "(iv) F2(l2(x,y),z) + c.p. + F1 l3 = l2'(F0x,F2(y,z)) + c.p. + l3'(F0x,F0y,F0z)";
    Report r(witness_cap);
    for (const auto& n : {c1, c2, c3, c4})
        r.check(n);
    for (const auto& m : funs) {
        Poly d = F0(cd.D(m)) - B.d_A(m);
        r.record(c1, d.is_zero(), to_string(c, m) + " -> " + to_string(c, d));
    }
    auto name = [&](const Poly& e) { return "(" + to_string(c, e) + ")"; };
    Report t = detail::parallel_checks(secs.size(), witness_cap, [&](std::size_t i, Report& rep) {
        rep.check(c2);
        rep.check(c3);
        rep.check(c4);
        const Poly& x = secs[i];
        for (const auto& m : funs) {
            Poly d = cd.anchor(x, m) * Scalar(1, 2) - B.anchor_Astar(F0(x), m) - F2(x, cd.D(m));
            rep.record(c3, d.is_zero(), name(x) + " " + to_string(c, m) + " -> " + to_string(c, d));
        }
        for (std::size_t j = i + 1; j < secs.size(); ++j) {
            const Poly& y = secs[j];
            Poly d = F0(cd.courant(x, y)) - B.bracket_Astar(F0(x), F0(y)) - B.d_A(F2(x, y));
            rep.record(c2, d.is_zero(), name(x) + " " + name(y) + " -> " + to_string(c, d));
            for (std::size_t k = j + 1; k < secs.size(); ++k) {
                const Poly* e[3] = {&x, &y, &secs[k]};
                Poly lhs = -cd.T(x, y, secs[k]);
                Poly rhs = -B.phi_eval(F0(x), F0(y), F0(secs[k]));
                for (int q = 0; q < 3; ++q) {
                    const Poly &a = *e[q], &b = *e[(q + 1) % 3], &z = *e[(q + 2) % 3];
                    lhs += F2(cd.courant(a, b), z);
                    rhs += B.anchor_Astar(F0(a), F2(b, z));
                }
                Poly dd = lhs - rhs;
                rep.record(c4, dd.is_zero(), name(x) + " " + name(y) + " " + name(secs[k]) + " -> " + to_string(c, dd));
            }
        }
    });
    r.merge(t);
    return r;
}

namespace {

struct Coordinates {
    MultivectorChart mc;
    Poly coord(int u) const { return Poly::variable(mc.x[u]); }
    Poly dir(int u) const { return Poly::variable(mc.p[u]); }
};

Poly lin_x(const GroupoidBivector& P, const Coordinates& C, const Vec& v)
{
    const auto g0 = P.g.space().ids_of_degree(0);
    Poly r;
    for (const auto& [id, k] : v)
        r += C.coord(P.x(index_in(g0, id))) * k;
    return r;
}

Poly lin_m(const GroupoidBivector& P, const Coordinates& C, const Vec& v)
{
    const auto g1 = P.g.space().ids_of_degree(-1);
    Poly r;
    for (const auto& [id, k] : v)
        r += C.coord(P.m(index_in(g1, id))) * k;
    return r;
}

}  // namespace

GroupoidBivector groupoid_bivector(const LInfty& g)
{
    if (!is_two_term(g))
        throw std::invalid_argument("the groupoid bivector needs a 2-term algebra");
    GroupoidBivector P;
    P.g = g;
    const auto g0 = g.space().ids_of_degree(0);
    const auto g1 = g.space().ids_of_degree(-1);
    P.d0 = static_cast<int>(g0.size());
    P.d1 = static_cast<int>(g1.size());
    Coordinates C{multivector_chart(P.dim())};
    const Chart& ch = C.mc.chart;
    Poly pi;
    auto put = [&](int u, int w, const Poly& f) { pi += mul(ch, f, mul(ch, C.dir(u), C.dir(w))); };
    for (int a = 0; a < P.d0; ++a) {
        for (int b = a + 1; b < P.d0; ++b)
            put(P.x(a), P.x(b), -lin_x(P, C, g.eval({g0[a], g0[b]})));
        for (int i = 0; i < P.d1; ++i)
            put(P.x(a), P.m(i), -lin_m(P, C, g.eval({g0[a], g1[i]})));
    }
    for (int i = 0; i < P.d1; ++i)
        for (int j = i + 1; j < P.d1; ++j) {
            Vec v;
            for (const auto& [a, k] : g.eval({g1[i]}))
                axpy(v, k, g.eval({a, g1[j]}));
            put(P.m(i), P.m(j), -lin_m(P, C, v));
        }
    P.pi = from_poly(pi, ch, C.mc.x, C.mc.p);
    return P;
}

PolyMultivector translate(const GroupoidBivector& P, bool left, const PolyMultivector& Lambda, Convention conv)
{
    if (Lambda.base_dim() != P.dim())
        throw std::invalid_argument("multivector on a different space");
    for (const auto& [k, c] : Lambda.terms()) {
        for (int d : k.first)
            if (d < P.d1)
                throw std::invalid_argument("not a section of wedge A: base direction");
        for (int a = 0; a < P.d0; ++a)
            if (k.second[P.x(a)] != 0)
                throw std::invalid_argument("not a section of wedge A: fiber dependence");
    }
    const Scalar s = conv == Convention::Left ? -1 : 1;
    const auto g0 = P.g.space().ids_of_degree(0);
    const auto g1 = P.g.space().ids_of_degree(-1);
    Coordinates C{multivector_chart(P.dim())};
    const Chart& ch = C.mc.chart;
    Poly f = to_poly(Lambda, ch, C.mc.x, C.mc.p);
    std::map<int, Poly> img;
    if (left) {
        for (int i = 0; i < P.d1; ++i)
            img[C.mc.x[P.m(i)]] = C.coord(P.m(i)) + lin_x(P, C, P.g.eval({g1[i]})) * s;
    } else {
        for (int a = 0; a < P.d0; ++a) {
            Poly d = C.dir(P.x(a));
            for (int i = 0; i < P.d1; ++i)
                d -= C.dir(P.m(i)) * (s * at(P.g.eval({g1[i]}), g0[a]));
            img[C.mc.p[P.x(a)]] = d;
        }
    }
    return from_poly(substitute(ch, f, img), ch, C.mc.x, C.mc.p);
}

PolyMultivector groupoid_phi(const GroupoidBivector& P)
{
    const auto g0 = P.g.space().ids_of_degree(0);
    Coordinates C{multivector_chart(P.dim())};
    const Chart& ch = C.mc.chart;
    Poly phi;
    for (int a = 0; a < P.d0; ++a)
        for (int b = a + 1; b < P.d0; ++b)
            for (int e = b + 1; e < P.d0; ++e) {
                Poly coef = -lin_m(P, C, P.g.eval({g0[a], g0[b], g0[e]}));
                phi += product(ch, {coef, C.dir(P.x(a)), C.dir(P.x(b)), C.dir(P.x(e))});
            }
    return from_poly(phi, ch, C.mc.x, C.mc.p);
}

Report verify_quasi_poisson(const GroupoidBivector& P, const PolyMultivector& phi, Convention c, std::size_t witness_cap)
{
    Report r(witness_cap);
    PolyMultivector left = translate(P, true, phi, c);
    PolyMultivector right = translate(P, false, phi, c);
    PolyMultivector d1 = schouten_bracket(P.pi, P.pi) * Scalar(1, 2) - (left - right);
    r.record("1/2[Pi,Pi] = <-phi - ->phi", d1.is_zero(), "defect " + d1.to_string());
    PolyMultivector d2 = schouten_bracket(P.pi, left);
    r.record("[Pi,<-phi] = 0", d2.is_zero(), "defect " + d2.to_string());
    return r;
}

Report verify_groupoid_generators(const GroupoidBivector& P, Convention c, std::size_t witness_cap)
{
    const auto g0 = P.g.space().ids_of_degree(0);
    const auto g1 = P.g.space().ids_of_degree(-1);
    Coordinates C{multivector_chart(P.dim())};
    const Chart& ch = C.mc.chart;
    auto mv = [&](const Poly& f) { return from_poly(f, ch, C.mc.x, C.mc.p); };
    Report r(witness_cap);
    const std::string tm = "t*m = m - l1 m", dm = "<-(delta m) = -[t*m, Pi]", dx = "[xi, Pi] = delta xi";
    for (const auto& n : {tm, dm, dx})
        r.check(n);
    for (int i = 0; i < P.d1; ++i) {
        PolyMultivector m = mv(C.coord(P.m(i)));
        PolyMultivector t = translate(P, true, m, c);
        PolyMultivector d = t - mv(C.coord(P.m(i)) - lin_x(P, C, P.g.eval({g1[i]})));
        r.record(tm, d.is_zero(), P.g.space().label(g1[i]) + ": defect " + d.to_string());
        Poly delta;
        for (int a = 0; a < P.d0; ++a)
            delta += mul(ch, lin_m(P, C, P.g.eval({g0[a], g1[i]})), C.dir(P.x(a)));
        PolyMultivector e = translate(P, true, mv(delta), c) + schouten_bracket(t, P.pi);
        r.record(dm, e.is_zero(), P.g.space().label(g1[i]) + ": defect " + e.to_string());
    }
    for (int a = 0; a < P.d0; ++a) {
        Poly delta;
        for (int b = 0; b < P.d0; ++b)
            for (int e = b + 1; e < P.d0; ++e)
                delta -= mul(ch, C.dir(P.x(b)), C.dir(P.x(e))) * at(P.g.eval({g0[b], g0[e]}), g0[a]);
        PolyMultivector d = schouten_bracket(mv(C.dir(P.x(a))), P.pi) - mv(delta);
        r.record(dx, d.is_zero(), P.g.space().label(g0[a]) + ": defect " + d.to_string());
    }
    return r;
}

}  // namespace lk
