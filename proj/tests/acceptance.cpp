// One line per acceptance criterion; exit code 1 if any fails.

#include "linfkit/courant.hpp"
#include "linfkit/generate.hpp"
#include "linfkit/homotopy_poisson.hpp"
#include "linfkit/ikeda_uchino.hpp"
#include "linfkit/linalg.hpp"
#include "linfkit/linfty.hpp"
#include "linfkit/poly.hpp"
#include "linfkit/quasi_groupoid.hpp"
#include "linfkit/schouten.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace lk;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failure;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            failure = what;
        }
    }
};

GradedSpace sp(const std::vector<GradedSpace::Component>& c) { return GradedSpace(c); }

// a | m | f with l1 m = a
LInfty one_dim_l1()
{
    LInfty L(sp({{0, {"a"}}, {-1, {"m"}}, {-2, {"f"}}}));
    L.set({"m"}, {{"a", 1}});
    return L;
}

// a b | m | f with [a,b] = b, l2(a,m) = m, l1 f = m, l2(a,f) = f
LInfty seed_211()
{
    LInfty L(sp({{0, {"a", "b"}}, {-1, {"m"}}, {-2, {"f"}}}));
    L.set({"a", "b"}, {{"b", 1}});
    L.set({"a", "m"}, {{"m", 1}});
    L.set({"f"}, {{"m", 1}});
    L.set({"a", "f"}, {{"f", 1}});
    return L;
}

instances::LieAlgebra abelian_lie(int n)
{
    instances::LieAlgebra k;
    for (int i = 0; i < n; ++i)
        k.labels.push_back("u" + std::to_string(i + 1));
    return k;
}

// [u1,u2] = u3
instances::LieAlgebra heisenberg_lie() { return {{"u1", "u2", "u3"}, {{{0, 1}, {{2, 1}}}}}; }

struct Named {
    std::string name;
    LInfty g;
};

std::vector<Named> two_term_instances()
{
    auto sl2K = instances::sl2_form();
    auto so3K = instances::so3_form();
    std::vector<Named> r{
        {"abelian", instances::abelian(sp({{0, {"a", "b"}}, {-1, {"u"}}}))},
        {"omni1", instances::omni(1)},
        {"omni2", instances::omni(2)},
        {"heisenberg", instances::heisenberg()},
        {"identity_aff", instances::identity_aff()},
        {"abelian_with_l1", instances::abelian_with_l1()},
        {"solvable_action", instances::solvable_action()},
        {"string_aff1", instances::string_type(instances::aff1())},
        {"string_sl2", instances::string_type(instances::sl2())},
        {"string_sl2K", instances::string_type(instances::sl2(), &sl2K)},
        {"string_so3", instances::string_type(instances::so3())},
        {"string_so3K", instances::string_type(instances::so3(), &so3K)},
    };
    Rng rng(2024);
    for (std::size_t i : {3, 4, 6, 11, 2})
        r.push_back({"gauged " + r[i].name, random_basis_change(random_gauge(r[i].g, 2, rng), rng)});
    return r;
}

std::vector<Named> three_term_instances()
{
    std::vector<Named> r{{"three_term_c", instances::three_term_c()},
                         {"three_term_d", instances::three_term_d()},
                         {"seed_211", seed_211()},
                         {"one_dim_l1", one_dim_l1()}};
    Rng rng(31);
    for (int t = 0; t < 2; ++t)
        for (std::size_t i : {0, 1, 2})
            r.push_back({"gauged " + r[i].name, random_basis_change(random_gauge(r[i].g, 3, rng), rng)});
    return r;
}

int max_component(const LInfty& g)
{
    std::size_t m = 0;
    for (int d : g.space().degrees())
        m = std::max(m, g.space().ids_of_degree(d).size());
    return static_cast<int>(m);
}

std::string first_failing(const Report& r)
{
    for (const auto& c : r.checks())
        if (!c.pass)
            return c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses.front());
    return {};
}

void require_report(Outcome& o, const std::string& where, const Report& r)
{
    o.require(r.pass(), where + ": " + first_failing(r));
}

// Instances of every check in r.
std::size_t instance_count(const Report& r)
{
    std::size_t n = 0;
    for (const auto& c : r.checks())
        n += c.instances;
    return n;
}

// ---------------------------------------------------------------------------

void c1_jacobi_vs_master(Outcome& o)
{
    Rng rng(1);
    const std::vector<GradedSpace> spaces{
        sp({{0, {"a", "b"}}, {-1, {"m"}}}),
        sp({{0, {"a"}}, {-1, {"m", "n"}}}),
        sp({{0, {"a", "b", "c"}}, {-1, {"m"}}}),
        sp({{0, {"a", "b"}}, {-1, {"m", "n"}}}),
        sp({{0, {"a", "b", "c"}}, {-1, {"m", "n"}}}),
        sp({{0, {"a", "b"}}, {-1, {"m"}}, {-2, {"f"}}}),
        sp({{0, {"a"}}, {-1, {"m"}}, {-2, {"f", "g"}}}),
        sp({{0, {"a"}}, {-1, {"m", "n"}}, {-2, {"f"}}}),
        sp({{0, {"a", "b"}}, {-1, {"m", "n"}}, {-2, {"f"}}}),
        sp({{0, {"a", "b"}}, {-1, {"m"}}, {-2, {"f", "g"}}}),
    };
    std::vector<LInfty> cands;
    const double density[] = {0.1, 0.2, 0.35, 0.5};
    for (const auto& s : spaces)
        for (int t = 0; t < 20; ++t)
            cands.push_back(random_candidate(s, density[t % 4], 2, s.terms() + 1, rng));
    // valid ones, moved around by gauge and basis changes
    const std::vector<std::pair<LInfty, int>> seeds{
        {instances::heisenberg(), 2}, {instances::identity_aff(), 2}, {instances::solvable_action(), 2},
        {instances::omni(2), 2},      {instances::three_term_d(), 3}, {seed_211(), 3},
        {one_dim_l1(), 3}};
    for (const auto& [seed, n] : seeds)
        for (int t = 0; t < 5; ++t)
            cands.push_back(random_basis_change(random_gauge(seed, n, rng), rng));
    int valid = 0, two = 0, three = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const LInfty& L = cands[i];
        const GradedSpace& s = L.space();
        o.require(s.dim() <= 5, "candidate " + std::to_string(i) + " has total dim > 5");
        (s.terms() == 3 ? three : two)++;
        Encoding e = hamiltonian_encode(L, s.terms());
        bool jac = check_higher_jacobi(L, 4).pass();
        bool me = check_master_equation(e.chart, e.hamiltonian).report.pass();
        o.require(jac == me, "verdicts differ on candidate " + std::to_string(i));
        valid += jac;
    }
    o.require(cands.size() >= 200, "fewer than 200 candidates");
    o.require(valid > 0 && valid < static_cast<int>(cands.size()), "all verdicts are equal");
    o.detail << cands.size() << " candidates (" << two << " 2-term, " << three << " 3-term), " << valid
             << " valid";
}

void c2_round_trip(Outcome& o)
{
    std::vector<Named> all = two_term_instances();
    for (auto& n : three_term_instances())
        all.push_back(n);
    const std::size_t base = all.size();
    for (std::size_t i = 0; i < base; ++i) {
        if (is_two_term(all[i].g))
            all.push_back({"new 2-term of " + all[i].name, new_two_term(all[i].g)});
        else
            all.push_back({"induced of " + all[i].name, induced_two_term(all[i].g).structure});
    }
    LieQuasiBialgebroidData B = split_quasi_bialgebroid(all[11].g);
    all.push_back({"Ker(d_A) of " + all[11].name, kerd_two_term(B, 1).structure});
    std::size_t tuples = 0;
    for (const auto& [name, g] : all) {
        o.require(check_higher_jacobi(g, 4).pass(), name + " is not an L-infinity algebra");
        const int n = g.space().terms();
        Encoding e = hamiltonian_encode(g, n);
        // decode visits every canonical tuple up to one past the top arity
        const int k = std::max(g.max_arity(), 1) + 1;
        LInfty back = decode(e, g.space(), k);
        o.require(back == g, name + ": decoded structure differs");
        for (const auto& [arity, entries] : g.maps())
            tuples += entries.size();
    }
    o.detail << all.size() << " structures, " << tuples << " stored constants";
}

void c3_omni(Outcome& o)
{
    for (int d : {1, 2}) {
        LInfty N = new_two_term(instances::omni(d));
        o.require(N == oracle::omni_new_two_term(d), "omni" + std::to_string(d) + ": tables differ");
        require_report(o, "omni" + std::to_string(d), check_higher_jacobi(N, 4));
        o.detail << "dim V = " << d << ": " << N.space().dim() << " basis elements, "
                 << N.arity(2).size() << " l2 and " << N.arity(3).size() << " l3 constants; ";
    }
}

void c4_string(Outcome& o)
{
    auto sl2K = instances::sl2_form();
    auto so3K = instances::so3_form();
    struct Case {
        std::string name;
        instances::LieAlgebra k;
        const std::vector<std::vector<Scalar>>* K;
    };
    const std::vector<Case> cases{{"R", abelian_lie(1), nullptr},
                                  {"R^2", abelian_lie(2), nullptr},
                                  {"aff1", instances::aff1(), nullptr},
                                  {"heis3", heisenberg_lie(), nullptr},
                                  {"sl2", instances::sl2(), nullptr},
                                  {"so3", instances::so3(), nullptr},
                                  {"sl2 quadratic", instances::sl2(), &sl2K},
                                  {"so3 quadratic", instances::so3(), &so3K}};
    for (const auto& c : cases) {
        LInfty g = instances::string_type(c.k, c.K);
        require_report(o, c.name + " input", check_higher_jacobi(g, 4));
        LInfty N = new_two_term(g);
        o.require(N == oracle::string_new_two_term(c.k, c.K), c.name + ": tables differ");
        require_report(o, c.name, check_higher_jacobi(N, 4));
    }
    o.detail << cases.size() << " Lie algebras of dim <= 3";
}

void c5_morphism(Outcome& o)
{
    int n = 0;
    for (const auto& [name, g] : two_term_instances()) {
        o.require(check_higher_jacobi(g, 4).pass(), name + " is not verified");
        Report r = verify_morphism(canonical_morphism(g), new_two_term(g), g);
        require_report(o, name, r);
        o.require(r.checks().size() == 4, name + ": expected four conditions");
        ++n;
    }
    o.detail << n << " instances";
}

void c6_courant(Outcome& o)
{
    int n = 0;
    std::size_t inst = 0;
    for (const auto& [name, g] : two_term_instances()) {
        CourantData cd = courant_from_2term(g);
        Report r = verify_courant_axioms(cd, 2);
        require_report(o, name, r);
        inst += instance_count(r);
        ++n;
    }
    o.detail << n << " instances, " << inst << " checked identities";
}

void c7_quasi_poisson(Outcome& o)
{
    int n = 0;
    for (const auto& [name, g] : two_term_instances()) {
        if (g.space().dim() > 4)
            continue;
        GroupoidBivector P = groupoid_bivector(g);
        require_report(o, name, verify_quasi_poisson(P, groupoid_phi(P)));
        require_report(o, name, verify_groupoid_generators(P));
        ++n;
    }
    o.require(n >= 10, "too few instances of total dim <= 4");
    o.detail << n << " instances of total dim <= 4";
}

void c8_ikeda_uchino(Outcome& o)
{
    int n = 0;
    for (const auto& [name, g] : three_term_instances()) {
        o.require(max_component(g) <= 2, name + " has a component of dim > 2");
        o.require(check_higher_jacobi(g, 4).pass(), name + " is not verified");
        require_report(o, name, verify_iu_axioms(iu_from_3term(g), 1));
        ++n;
    }
    const std::string corollary = "Lie algebroid case: [[e1,e2],e3] + c.p. = 0";
    LInfty d = instances::three_term_d();
    o.require(is_lie_algebroid_case(d), "three_term_d is not the Lie algebroid case");
    Report r = verify_iu_axioms(iu_from_3term(d), 1);
    const Check* c = r.find(corollary);
    o.require(c != nullptr && c->pass && c->instances > 0, "Jacobiator does not vanish on three_term_d");
    o.detail << n << " instances; corollary on three_term_d with " << (c ? c->instances : 0) << " triples";
}

void c9_induced(Outcome& o)
{
    int n = 0;
    for (const auto& [name, g] : three_term_instances()) {
        InducedTwoTerm I = induced_two_term(g);
        require_report(o, name, I.report);
        o.require(is_two_term(I.structure), name + ": not 2-term");
        require_report(o, name, check_higher_jacobi(I.structure, 4));
        // h-1 against an independent rank count of rho on h0
        IkedaUchinoData d = iu_from_3term(g);
        const GradedSpace& h = I.structure.space();
        std::vector<int> h0 = h.ids_of_degree(0), h1 = h.ids_of_degree(-1);
        std::map<std::pair<int, Monomial>, std::map<int, Scalar>> rows;
        for (std::size_t j = 0; j < h0.size(); ++j)
            for (std::size_t k = 0; k < d.base.size(); ++k)
                for (const auto& [m, c] : d.anchor(I.element.at(h0[j]), d.coord(static_cast<int>(k))).terms)
                    rows[{static_cast<int>(k), m}][static_cast<int>(j)] += c;
        Matrix M;
        for (const auto& [key, row] : rows) {
            std::vector<Scalar> r(h0.size());
            for (const auto& [j, c] : row)
                r[j] = c;
            M.push_back(r);
        }
        const int expect = static_cast<int>(h0.size()) - rank(M, static_cast<int>(h0.size()));
        o.require(static_cast<int>(h1.size()) == expect, name + ": dim h-1 is not dim ker rho");
        for (int id : h1)
            for (std::size_t k = 0; k < d.base.size(); ++k)
                o.require(d.anchor(I.element.at(id), d.coord(static_cast<int>(k))).is_zero(),
                          name + ": h-1 element outside ker rho");
        ++n;
    }
    o.detail << n << " instances";
}

void c10_twisted(Outcome& o)
{
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> coef(-3, 3), count(1, 4), pick(0, 9);
    // monomials of degree <= 2 on R^3
    std::vector<std::vector<int>> monos;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
            for (int c = 0; a + b + c <= 2; ++c)
                monos.push_back({a, b, c});
    const std::vector<std::vector<int>> pairs{{0, 1}, {0, 2}, {1, 2}};
    int poisson = 0, total = 0;
    for (int t = 0; t < 60; ++t) {
        std::vector<Scalar> H{Scalar(coef(rng)) / 2};
        auto T = twisted_poisson_presentation(3, H);
        const Chart& c = T.presentation.chart;
        PolyMultivector pi(3);
        if (t % 10 == 0) {
            // so(3)* scaled, Poisson
            pi.add({0, 1}, {0, 0, 1}, Scalar(t / 10 + 1));
            pi.add({1, 2}, {1, 0, 0}, Scalar(t / 10 + 1));
            pi.add({2, 0}, {0, 1, 0}, Scalar(t / 10 + 1));
        } else {
            for (const auto& d : pairs) {
                int k = count(rng);
                for (int s = 0; s < k; ++s)
                    pi.add(d, monos[pick(rng)], Scalar(coef(rng)));
            }
        }
        Poly mc = mc_residual(T.presentation, to_poly(pi, c, T.x, T.p));
        PolyMultivector tw = twisted_poisson_residual(pi, ConstantThreeForm::from_triples(3, H));
        o.require(from_poly(mc, c, T.x, T.p) == tw, "residuals differ on sample " + std::to_string(t));
        poisson += tw.is_zero();
        ++total;
    }
    o.detail << total << " bivectors, " << poisson << " twisted Poisson";
}

// all monomials with at most max_factors factors
std::vector<Poly> all_monomials(const Chart& c, int max_factors)
{
    std::vector<Poly> out;
    std::vector<int> f;
    std::function<void(int)> rec = [&](int from) {
        auto n = normalize_monomial(c, f);
        if (n && n->first != 0) {
            Poly p;
            p.add_term(n->second, Scalar(1));
            out.push_back(p);
        }
        if (static_cast<int>(f.size()) == max_factors)
            return;
        for (int v = from; v < c.size(); ++v) {
            f.push_back(v);
            rec(v);
            f.pop_back();
        }
    };
    rec(0);
    return out;
}

int sgn(long long e) { return e % 2 == 0 ? 1 : -1; }

void c11_bracket(Outcome& o)
{
    struct Setup {
        int n;
        std::vector<int> q;  // position degrees; momenta get n - q
    };
    const std::vector<Setup> setups{{1, {0, 0, 0}}, {2, {0, 1, 1}}, {3, {0, 1, 2}}};
    std::size_t triples = 0;
    for (const auto& st : setups) {
        Chart c(st.n);
        for (std::size_t i = 0; i < st.q.size(); ++i) {
            int q = c.add("q" + std::to_string(i), st.q[i]);
            int p = c.add("p" + std::to_string(i), st.n - st.q[i], true);
            c.pair(q, p);
        }
        o.require(c.size() <= 6, "chart too large");
        std::vector<Poly> mons = all_monomials(c, 3);
        const std::size_t N = mons.size();
        std::vector<int> deg(N);
        for (std::size_t i = 0; i < N; ++i)
            deg[i] = *homogeneous_degree(c, mons[i]);
        std::vector<std::vector<Poly>> br(N, std::vector<Poly>(N)), pr(N, std::vector<Poly>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                br[i][j] = bracket(c, mons[i], mons[j]);
                pr[i][j] = mul(c, mons[i], mons[j]);
            }
        const int n = st.n;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                long long di = deg[i] - n, dj = deg[j] - n;
                o.require(br[i][j] == br[j][i] * Scalar(-sgn(di * dj)), "antisymmetry");
                for (std::size_t k = 0; k < N; ++k) {
                    Poly lhs = bracket(c, mons[i], br[j][k]);
                    Poly rhs = bracket(c, br[i][j], mons[k]) + bracket(c, mons[j], br[i][k]) * Scalar(sgn(di * dj));
                    o.require(lhs == rhs, "Jacobi");
                    Poly lb = bracket(c, mons[i], pr[j][k]);
                    Poly rb = mul(c, br[i][j], mons[k]) + mul(c, mons[j], br[i][k]) * Scalar(sgn(di * deg[j]));
                    o.require(lb == rb, "biderivation");
                    ++triples;
                }
            }
        o.detail << "shift " << n << ": " << N << " monomials; ";
    }
    o.detail << triples << " triples";
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        void (*run)(Outcome&);
    };
    const Criterion criteria[] = {
        {1, "Jacobi <=> master equation on random candidates", c1_jacobi_vs_master},
        {2, "derived-bracket round trip", c2_round_trip},
        {3, "new 2-term algebra of V -Id-> V", c3_omni},
        {4, "string and quadratic string tables", c4_string},
        {5, "canonical morphism", c5_morphism},
        {6, "Courant axioms at coefficient degree 2", c6_courant},
        {7, "quasi-Poisson groupoid", c7_quasi_poisson},
        {8, "Ikeda-Uchino axioms and Lie algebroid case", c8_ikeda_uchino},
        {9, "induced 2-term algebra", c9_induced},
        {10, "Maurer-Cartan vs twisted Poisson residual on R^3", c10_twisted},
        {11, "bracket antisymmetry, Jacobi and biderivation", c11_bracket},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %s  %s [%.1fs] %s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, s,
                    o.detail.str().c_str(), o.pass ? "" : (" -- " + o.failure).c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
