#include "linfkit/linfty.hpp"

#include "linfkit/sign.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lk {

namespace {

const std::map<Tuple, Vec> k_empty;

// Visits every sorted multiset of n ids from 0..dim-1.
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

int tuple_degree(const GradedSpace& sp, const Tuple& t)
{
    int d = 0;
    for (int a : t)
        d += sp.degree(a);
    return d;
}

bool has_degree(const GradedSpace& sp, int d)
{
    return !sp.ids_of_degree(d).empty();
}

int epsilon(const GradedSpace& sp, const Tuple& t)
{
    long long e = 0;
    const int k = static_cast<int>(t.size());
    for (int i = 0; i < k; ++i)
        e += static_cast<long long>(k - i - 1) * sp.degree(t[i]);
    return parity_sign(e);
}

}  // namespace

std::pair<int, Tuple> LInfty::canonicalize(const Tuple& args) const
{
    Tuple t = args;
    for (int a : t)
        if (a < 0 || a >= space_.dim())
            throw std::out_of_range("basis id out of range");
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
            if (t[j] > t[j + 1]) {
                long long dd = static_cast<long long>(space_.degree(t[j])) * space_.degree(t[j + 1]);
                if (dd % 2 == 0)
                    sign = -sign;
                std::swap(t[j], t[j + 1]);
            }
    for (std::size_t j = 0; j + 1 < t.size(); ++j)
        if (t[j] == t[j + 1] && space_.degree(t[j]) % 2 == 0)
            return {0, {}};
    return {sign, std::move(t)};
}

void LInfty::set(const Tuple& args, const Vec& out)
{
    if (args.empty())
        throw std::invalid_argument("structure maps need at least one input");
    auto [s, t] = canonicalize(args);
    if (s == 0) {
        if (!lk::is_zero(out))
            throw std::invalid_argument("value on " + tuple_string(args) + " is forced to vanish");
        return;
    }
    for (const auto& [o, c] : out)
        if (o < 0 || o >= space_.dim())
            throw std::out_of_range("output basis id out of range");
    const int k = static_cast<int>(args.size());
    Vec v = scaled(out, Scalar(s));
    for (auto it = v.begin(); it != v.end();)
        it = it->second == 0 ? v.erase(it) : std::next(it);
    if (v.empty()) {
        auto m = maps_.find(k);
        if (m != maps_.end()) {
            m->second.erase(t);
            if (m->second.empty())
                maps_.erase(m);
        }
        return;
    }
    maps_[k][t] = std::move(v);
}

void LInfty::set(const std::vector<std::string>& args, const std::vector<std::pair<std::string, Scalar>>& out)
{
    Tuple t;
    for (const auto& a : args)
        t.push_back(space_.id(a));
    Vec v;
    for (const auto& [l, c] : out)
        axpy(v, c, basis_vec(space_.id(l)));
    set(t, v);
}

void LInfty::add(const Tuple& args, const Vec& out)
{
    Vec v = eval(args);
    axpy(v, Scalar(1), out);
    set(args, v);
}

Vec LInfty::eval(const Tuple& args) const
{
    if (args.empty())
        return {};
    auto m = maps_.find(static_cast<int>(args.size()));
    if (m == maps_.end())
        return {};
    auto [s, t] = canonicalize(args);
    if (s == 0)
        return {};
    auto it = m->second.find(t);
    if (it == m->second.end())
        return {};
    return s > 0 ? it->second : scaled(it->second, Scalar(-1));
}

Vec LInfty::eval_vec(const std::vector<Vec>& args) const
{
    Vec r;
    if (args.empty() || !maps_.count(static_cast<int>(args.size())))
        return r;
    for (const auto& a : args)
        if (a.empty())
            return r;
    Tuple t(args.size());
    std::vector<Vec::const_iterator> it(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        it[i] = args[i].begin();
    while (true) {
        Scalar c = 1;
        for (std::size_t i = 0; i < args.size(); ++i) {
            t[i] = it[i]->first;
            c *= it[i]->second;
        }
        axpy(r, c, eval(t));
        std::size_t k = args.size();
        while (k > 0) {
            --k;
            if (++it[k] != args[k].end())
                break;
            it[k] = args[k].begin();
            if (k == 0)
                return r;
        }
    }
}

const std::map<Tuple, Vec>& LInfty::arity(int k) const
{
    auto it = maps_.find(k);
    return it == maps_.end() ? k_empty : it->second;
}

int LInfty::max_arity() const
{
    return maps_.empty() ? 0 : maps_.rbegin()->first;
}

std::map<Tuple, Vec> LInfty::component(int k, std::vector<int> degrees) const
{
    std::sort(degrees.begin(), degrees.end());
    std::map<Tuple, Vec> r;
    for (const auto& [t, v] : arity(k)) {
        std::vector<int> d;
        for (int a : t)
            d.push_back(space_.degree(a));
        if (d == degrees)
            r.emplace(t, v);
    }
    return r;
}

std::string LInfty::tuple_string(const Tuple& t) const
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ", ";
        s += space_.label(t[i]);
    }
    return s + ")";
}

std::string LInfty::vec_string(const Vec& v) const
{
    if (v.empty())
        return "0";
    std::string s;
    for (const auto& [id, c] : v) {
        if (!s.empty())
            s += ' ';
        if (c != 1)
            s += to_string(c) + ' ';
        s += space_.label(id);
    }
    return s;
}

Report degree_audit(const LInfty& L)
{
    Report rep;
    const auto& sp = L.space();
    rep.check("deg(l_k)=2-k");
    for (const auto& [k, tab] : L.maps())
        for (const auto& [t, v] : tab) {
            const int want = tuple_degree(sp, t) + 2 - k;
            for (const auto& [o, c] : v) {
                bool ok = sp.degree(o) == want;
                rep.record("deg(l_k)=2-k", ok,
                           ok ? "" : "l_" + std::to_string(k) + L.tuple_string(t) + " has output " + sp.label(o) +
                                         " of degree " + std::to_string(sp.degree(o)) + ", expected " +
                                         std::to_string(want));
            }
        }
    return rep;
}

Report check_higher_jacobi(const LInfty& L, int n_max)
{
    Report rep;
    const auto& sp = L.space();
    const int dim = sp.dim();
    std::vector<std::vector<std::vector<int>>> uns;
    for (int n = 1; n <= n_max; ++n) {
        const std::string name = "jacobi n=" + std::to_string(n);
        rep.check(name);
        for_each_multiset(dim, n, [&](const Tuple& tup) {
            if (L.canonicalize(tup).first == 0)
                return;
            if (!has_degree(sp, tuple_degree(sp, tup) + 3 - n))
                return;
            std::vector<int> degs;
            for (int a : tup)
                degs.push_back(sp.degree(a));
            Vec total;
            for (int i = 1; i <= n; ++i) {
                const int j = n + 1 - i;
                if (L.arity(i).empty() || L.arity(j).empty())
                    continue;
                const int outer = parity_sign(static_cast<long long>(i) * (j - 1));
                for (const auto& perm : unshuffles(n, i)) {
                    Tuple inner(perm.begin(), perm.begin() + i);
                    for (auto& p : inner)
                        p = tup[p];
                    Vec in = L.eval(inner);
                    if (in.empty())
                        continue;
                    const int s = outer * koszul_sign(perm, degs, true);
                    Tuple rest;
                    for (int p = i; p < n; ++p)
                        rest.push_back(tup[perm[p]]);
                    std::vector<Vec> args{in};
                    for (int r : rest)
                        args.push_back(basis_vec(r));
                    axpy(total, Scalar(s), L.eval_vec(args));
                }
            }
            bool ok = total.empty();
            rep.record(name, ok, ok ? "" : L.tuple_string(tup) + " -> " + L.vec_string(total));
        });
    }
    return rep;
}

Encoding make_chart(const GradedSpace& space, int n)
{
    Encoding e{Chart(n), Poly{}, n, {}, {}};
    for (int i = 0; i < space.dim(); ++i)
        e.position.push_back(e.chart.add(space.label(i), space.degree(i) + n - 1));
    for (int i = 0; i < space.dim(); ++i) {
        e.momentum.push_back(e.chart.add(space.label(i) + "*", 1 - space.degree(i), true));
        e.chart.pair(e.position[i], e.momentum[i]);
    }
    return e;
}

Poly derived_bracket(const Chart& chart, const Poly& H, const std::vector<Poly>& args)
{
    Poly f = H;
    for (const auto& a : args) {
        if (f.is_zero())
            break;
        f = bracket(chart, a, f);
    }
    return restrict_to_base(chart, f);
}

namespace {

std::vector<Poly> position_args(const Encoding& enc, const Tuple& t)
{
    std::vector<Poly> r;
    for (int a : t)
        r.push_back(Poly::variable(enc.position.at(a)));
    return r;
}

}  // namespace

Encoding hamiltonian_encode(const LInfty& L, int n)
{
    Report audit = degree_audit(L);
    if (!audit.pass())
        throw std::invalid_argument("structure fails the degree rule deg(l_k)=2-k: " +
                                    audit.checks().front().witnesses.front());
    const auto& sp = L.space();
    Encoding enc = make_chart(sp, n);
    for (const auto& [k, tab] : L.maps())
        for (const auto& [tup, out] : tab) {
            std::vector<Poly> moms;
            for (int a : tup)
                moms.push_back(Poly::variable(enc.momentum[a]));
            Poly mono = product(enc.chart, moms);
            if (mono.is_zero())
                throw std::logic_error("momentum monomial vanishes on " + L.tuple_string(tup));
            const auto args = position_args(enc, tup);
            const int eps = epsilon(sp, tup);
            for (const auto& [o, x] : out) {
                Poly term = mul(enc.chart, mono, Poly::variable(enc.position[o]));
                Poly d = derived_bracket(enc.chart, term, args);
                Scalar c = d.coefficient(Monomial{{enc.position[o], 1}});
                if (c == 0 || d.size() != 1)
                    throw std::logic_error("degenerate normalization on " + L.tuple_string(tup));
                enc.hamiltonian += term * Scalar(eps * x / c);
            }
        }
    return enc;
}

Vec extract(const Encoding& enc, const GradedSpace& space, const Tuple& args)
{
    Vec r;
    if (args.empty())
        return r;
    Poly d = derived_bracket(enc.chart, enc.hamiltonian, position_args(enc, args));
    const int eps = epsilon(space, args);
    for (const auto& [m, c] : d.terms) {
        if (m.size() != 1 || m[0].second != 1 || enc.chart.is_momentum(m[0].first) ||
            m[0].first >= space.dim())
            throw std::logic_error("derived bracket is not linear: " + to_string(enc.chart, d));
        r[m[0].first] = eps > 0 ? c : Scalar(-c);
    }
    return r;
}

LInfty decode(const Encoding& enc, const GradedSpace& space, int k_max)
{
    LInfty L(space);
    for (int k = 1; k <= k_max; ++k)
        for_each_multiset(space.dim(), k, [&](const Tuple& t) {
            if (L.canonicalize(t).first == 0)
                return;
            if (!has_degree(space, tuple_degree(space, t) + 2 - k))
                return;
            Vec v = extract(enc, space, t);
            if (!v.empty())
                L.set(t, v);
        });
    return L;
}

MasterEquation check_master_equation(const Chart& chart, const Poly& H, std::size_t witness_cap)
{
    MasterEquation me{bracket(chart, H, H), {}, Report(witness_cap)};
    me.report.check("{H,H}=0");
    for (const auto& [m, c] : me.square.terms) {
        me.arity_parts[momentum_order(chart, m)].add_term(m, c / 2);
        me.report.fail("{H,H}=0", to_string(c) + "*" + to_string(chart, m));
    }
    if (me.square.is_zero())
        me.report.record("{H,H}=0", true);
    return me;
}

Poly arity_bracket(const Chart& chart, const Poly& H, int i, int j)
{
    auto part = [&](int k) { return filter(H, [&](const Monomial& m) { return momentum_order(chart, m) == k; }); };
    return bracket(chart, part(i), part(j));
}

Vec TwoTermMorphism::f0(const Vec& x) const
{
    Vec r;
    for (const auto& [a, c] : x) {
        auto it = F0.find(a);
        if (it != F0.end())
            axpy(r, c, it->second);
    }
    return r;
}

Vec TwoTermMorphism::f1(const Vec& m) const
{
    Vec r;
    for (const auto& [a, c] : m) {
        auto it = F1.find(a);
        if (it != F1.end())
            axpy(r, c, it->second);
    }
    return r;
}

Vec TwoTermMorphism::f2(const Vec& x, const Vec& y) const
{
    Vec r;
    for (const auto& [a, c] : x)
        for (const auto& [b, d] : y) {
            if (a == b)
                continue;
            auto it = F2.find({std::min(a, b), std::max(a, b)});
            if (it != F2.end())
                axpy(r, a < b ? Scalar(c * d) : Scalar(-(c * d)), it->second);
        }
    return r;
}

void TwoTermMorphism::set_f2(int a, int b, const Vec& v)
{
    if (a == b) {
        if (!lk::is_zero(v))
            throw std::invalid_argument("F2 is antisymmetric");
        return;
    }
    if (a < b)
        F2[{a, b}] = v;
    else
        F2[{b, a}] = scaled(v, Scalar(-1));
}

bool is_two_term(const LInfty& L)
{
    for (const auto& b : L.space().basis())
        if (b.degree != 0 && b.degree != -1)
            return false;
    return true;
}

Report verify_morphism(const TwoTermMorphism& F, const LInfty& g, const LInfty& gp)
{
    if (!is_two_term(g) || !is_two_term(gp))
        throw std::invalid_argument("verify_morphism needs 2-term algebras");
    Report rep;
    const auto g0 = g.space().ids_of_degree(0);
    const auto g1 = g.space().ids_of_degree(-1);
    auto l = [](const LInfty& L, std::vector<Vec> a) { return L.eval_vec(a); };
    auto diff = [](Vec a, const Vec& b) {
        axpy(a, Scalar(-1), b);
        return a;
    };
    const std::string c1 = "(i) F0 l1 = l1' F1", c2 = "(ii) F0 l2(x,y) - l2'(F0x,F0y) = l1' F2(x,y)",
                      c3 = "(iii) F1 l2(x,m) - l2'(F0x,F1m) = F2(x,l1 m)",
                      c4 = "(iv) F2(l2(x,y),z) + c.p. + F1 l3 = l2'(F0x,F2(y,z)) + c.p. + l3'(F0x,F0y,F0z)";
    for (const auto& c : {c1, c2, c3, c4})
        rep.check(c);
    for (int m : g1) {
        Vec r = diff(F.f0(g.eval({m})), l(gp, {F.f1(basis_vec(m))}));
        rep.record(c1, r.empty(), g.tuple_string({m}) + " -> " + gp.vec_string(r));
    }
    for (std::size_t i = 0; i < g0.size(); ++i)
        for (std::size_t j = i + 1; j < g0.size(); ++j) {
            Vec x = basis_vec(g0[i]), y = basis_vec(g0[j]);
            Vec r = diff(diff(F.f0(g.eval({g0[i], g0[j]})), l(gp, {F.f0(x), F.f0(y)})), l(gp, {F.f2(x, y)}));
            rep.record(c2, r.empty(), g.tuple_string({g0[i], g0[j]}) + " -> " + gp.vec_string(r));
        }
    for (int a : g0)
        for (int m : g1) {
            Vec x = basis_vec(a);
            Vec r = diff(diff(F.f1(g.eval({a, m})), l(gp, {F.f0(x), F.f1(basis_vec(m))})), F.f2(x, g.eval({m})));
            rep.record(c3, r.empty(), g.tuple_string({a, m}) + " -> " + gp.vec_string(r));
        }
    for (std::size_t i = 0; i < g0.size(); ++i)
        for (std::size_t j = i + 1; j < g0.size(); ++j)
            for (std::size_t k = j + 1; k < g0.size(); ++k) {
                const int e[3] = {g0[i], g0[j], g0[k]};
                Vec lhs = F.f1(g.eval({e[0], e[1], e[2]}));
                Vec rhs = l(gp, {F.f0(basis_vec(e[0])), F.f0(basis_vec(e[1])), F.f0(basis_vec(e[2]))});
                for (int c = 0; c < 3; ++c) {
                    int a = e[c], b = e[(c + 1) % 3], d = e[(c + 2) % 3];
                    axpy(lhs, Scalar(1), F.f2(g.eval({a, b}), basis_vec(d)));
                    axpy(rhs, Scalar(1), l(gp, {F.f0(basis_vec(a)), F.f2(basis_vec(b), basis_vec(d))}));
                }
                Vec r = diff(lhs, rhs);
                rep.record(c4, r.empty(), g.tuple_string({e[0], e[1], e[2]}) + " -> " + gp.vec_string(r));
            }
    return rep;
}

}  // namespace lk
