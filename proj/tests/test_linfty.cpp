#include <doctest.h>

#include "linfkit/courant.hpp"
#include "linfkit/generate.hpp"
#include "linfkit/linfty.hpp"
#include "oracles.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace lk;

namespace {

GradedSpace space(const std::vector<GradedSpace::Component>& c) { return GradedSpace(c); }

// [a,b] = b, [a,c] = c, [b,c] = a: the Jacobiator of (a,b,c) is 2a
LInfty broken_lie()
{
    LInfty L(space({{0, {"a", "b", "c"}}}));
    L.set({"a", "b"}, {{"b", 1}});
    L.set({"a", "c"}, {{"c", 1}});
    L.set({"b", "c"}, {{"a", 1}});
    return L;
}

LInfty heisenberg_bad_l3()
{
    LInfty L = instances::heisenberg();
    L.set({"a", "b", "z"}, {{"r", 1}});
    return L;
}

TwoTermMorphism identity_of(const LInfty& g)
{
    TwoTermMorphism F;
    for (int id = 0; id < g.space().dim(); ++id) {
        if (g.space().degree(id) == 0)
            F.F0[id] = basis_vec(id);
        else
            F.F1[id] = basis_vec(id);
    }
    return F;
}

const Check& get(const Report& r, const std::string& name)
{
    const Check* c = r.find(name);
    REQUIRE_MESSAGE(c != nullptr, name);
    return *c;
}

}  // namespace

TEST_CASE("antisymmetric storage")
{
    LInfty L(space({{0, {"a", "b"}}, {-1, {"m", "n"}}, {-2, {"f"}}}));
    L.set({"b", "a"}, {{"b", 1}});
    CHECK(L.eval({L.space().id("a"), L.space().id("b")}) == Vec{{L.space().id("b"), -1}});
    int a = L.space().id("a"), b = L.space().id("b"), m = L.space().id("m"), n = L.space().id("n"), f = L.space().id("f");
    CHECK(L.eval({b, a}) == Vec{{b, 1}});
    // degree -1 entries commute
    L.set({n, m}, {{f, 1}});
    CHECK(L.eval({m, n}) == Vec{{f, 1}});
    L.set({m, m}, {{f, 3}});
    CHECK(L.eval({m, m}) == Vec{{f, 3}});
    CHECK(L.canonicalize({a, a}).first == 0);
    CHECK_THROWS_AS(L.set({a, a}, {{b, 1}}), std::invalid_argument);
    // setting zero erases
    L.set({m, m}, {});
    CHECK(L.eval({m, m}).empty());
    CHECK(L.eval_vec({Vec{{a, 2}}, Vec{{a, 1}, {b, 1}}}) == Vec{{b, -2}});
    CHECK(L.max_arity() == 2);
    CHECK(L.component(2, {-1, -1}).size() == 1);
    CHECK(L.component(2, {0, 0}).size() == 1);
}

TEST_CASE("degree audit")
{
    LInfty L(space({{0, {"a", "b"}}, {-1, {"m"}}}));
    L.set({"a", "b"}, {{"m", 1}});
    CHECK_FALSE(degree_audit(L).pass());
    CHECK(degree_audit(instances::heisenberg()).pass());
    CHECK_THROWS_AS(hamiltonian_encode(L, 2), std::invalid_argument);
}

TEST_CASE("Jacobi examples")
{
    CHECK(check_higher_jacobi(instances::abelian(space({{0, {"a"}}, {-1, {"m"}}})), 4).pass());
    CHECK(check_higher_jacobi(instances::heisenberg(), 4).pass());
    CHECK(check_higher_jacobi(instances::identity_aff(), 4).pass());
    CHECK(check_higher_jacobi(instances::solvable_action(), 4).pass());
    CHECK(check_higher_jacobi(instances::three_term_c(), 4).pass());
    CHECK(check_higher_jacobi(instances::three_term_d(), 4).pass());
    CHECK(check_higher_jacobi(instances::three_term_e(), 4).pass());
    auto so3 = instances::so3_form();
    CHECK(check_higher_jacobi(instances::string_type(instances::so3(), &so3), 4).pass());
    auto sl2 = instances::sl2_form();
    CHECK(check_higher_jacobi(instances::string_type(instances::sl2(), &sl2), 4).pass());

    Report r = check_higher_jacobi(broken_lie(), 4);
    CHECK_FALSE(r.pass());
    CHECK(get(r, "jacobi n=3").failures == 1);
    CHECK_FALSE(get(r, "jacobi n=3").witnesses.empty());
    CHECK(get(r, "jacobi n=2").pass);

    Report h = check_higher_jacobi(heisenberg_bad_l3(), 4);
    CHECK_FALSE(get(h, "jacobi n=3").pass);
}

TEST_CASE("chart degrees")
{
    const GradedSpace s2 = instances::omni(1).space();
    Encoding two = make_chart(s2, 2);
    CHECK(two.chart.shift() == 2);
    CHECK(two.chart.degree(two.position[s2.id("v0")]) == 1);
    CHECK(two.chart.degree(two.position[s2.id("m0")]) == 0);
    CHECK(two.chart.degree(two.momentum[s2.id("v0")]) == 1);
    CHECK(two.chart.degree(two.momentum[s2.id("m0")]) == 2);

    const GradedSpace s3 = instances::three_term_c().space();
    Encoding three = make_chart(s3, 3);
    std::vector<std::string> labels{"a", "m", "f"};
    std::vector<int> pos{2, 1, 0}, mom{1, 2, 3};
    for (int k = 0; k < 3; ++k) {
        CHECK(three.chart.degree(three.position[s3.id(labels[k])]) == pos[k]);
        CHECK(three.chart.degree(three.momentum[s3.id(labels[k])]) == mom[k]);
        Poly q = Poly::variable(three.position[s3.id(labels[k])]);
        Poly p = Poly::variable(three.momentum[s3.id(labels[k])]);
        CHECK(bracket(three.chart, q, p) == Poly::constant(1));
    }
}

TEST_CASE("encoding examples")
{
    LInfty g = instances::omni(1);
    Encoding e = hamiltonian_encode(g, 2);
    const GradedSpace& s = g.space();
    CHECK(homogeneous_degree(e.chart, e.hamiltonian) == 3);
    CHECK(e.hamiltonian.size() == 1);
    CHECK(extract(e, s, {s.id("m0")}) == Vec{{s.id("v0"), 1}});

    LInfty c = instances::three_term_c();
    Encoding ec = hamiltonian_encode(c, 3);
    CHECK(homogeneous_degree(ec.chart, ec.hamiltonian) == 4);
    CHECK(decode(ec, c.space(), 4) == c);

    // Lie algebra on the 1-term chart
    LInfty k = instances::string_type(instances::so3());
    GradedSpace k0(std::vector<GradedSpace::Component>{{0, {"u1", "u2", "u3"}}});
    LInfty lie(k0);
    for (const auto& [t, v] : k.arity(2)) {
        std::vector<std::pair<std::string, Scalar>> out;
        for (const auto& [id, c] : v)
            out.emplace_back(k.space().label(id), c);
        lie.set(std::vector<std::string>{k.space().label(t[0]), k.space().label(t[1])}, out);
    }
    Encoding el = hamiltonian_encode(lie, 1);
    CHECK(homogeneous_degree(el.chart, el.hamiltonian) == 2);
    CHECK(decode(el, k0, 3) == lie);
    CHECK(check_master_equation(el.chart, el.hamiltonian).report.pass());
}

TEST_CASE("round trip on random structures")
{
    Rng rng(5);
    std::vector<GradedSpace> spaces{space({{0, {"a", "b"}}, {-1, {"m"}}}),
                                    space({{0, {"a"}}, {-1, {"m", "n"}}}),
                                    space({{0, {"a", "b"}}, {-1, {"m"}}, {-2, {"f"}}}),
                                    space({{0, {"a"}}, {-1, {"m"}}, {-2, {"f", "g"}}})};
    int count = 0;
    for (const auto& s : spaces)
        for (int t = 0; t < 15; ++t) {
            LInfty L = random_candidate(s, 0.5, 3, 4, rng);
            Encoding e = hamiltonian_encode(L, s.terms());
            REQUIRE(decode(e, s, L.max_arity() + 1) == L);
            ++count;
        }
    for (auto seed : {instances::three_term_c(), instances::three_term_d(), instances::three_term_e()}) {
        LInfty L = random_gauge(seed, 3, rng);
        Encoding e = hamiltonian_encode(L, 3);
        REQUIRE(decode(e, L.space(), 5) == L);
        ++count;
    }
    CHECK(count == 63);
}

TEST_CASE("master equation agrees with Jacobi")
{
    Rng rng(9);
    std::vector<GradedSpace> spaces{space({{0, {"a", "b"}}, {-1, {"m"}}}),
                                    space({{0, {"a", "b", "c"}}}),
                                    space({{0, {"a", "b"}}, {-1, {"m"}}, {-2, {"f"}}})};
    int valid = 0;
    for (const auto& s : spaces)
        for (int t = 0; t < 20; ++t) {
            LInfty L = random_candidate(s, 0.4, 2, 4, rng);
            Encoding e = hamiltonian_encode(L, s.terms());
            bool jac = check_higher_jacobi(L, 4).pass();
            bool me = check_master_equation(e.chart, e.hamiltonian).report.pass();
            REQUIRE(jac == me);
            valid += jac;
        }
    for (auto seed : {instances::three_term_c(), instances::three_term_d(), instances::three_term_e()}) {
        LInfty L = random_gauge(seed, 3, rng);
        Encoding e = hamiltonian_encode(L, 3);
        REQUIRE(check_higher_jacobi(L, 4).pass());
        REQUIRE(check_master_equation(e.chart, e.hamiltonian).report.pass());
        ++valid;
    }
    CHECK(valid >= 3);
}

TEST_CASE("a perturbed l3 shows up in the arity-3 part")
{
    LInfty L = heisenberg_bad_l3();
    Encoding e = hamiltonian_encode(L, 2);
    MasterEquation me = check_master_equation(e.chart, e.hamiltonian);
    CHECK_FALSE(me.report.pass());
    CHECK_FALSE(me.square.is_zero());
    REQUIRE(me.arity_parts.count(3) == 1);
    CHECK_FALSE(me.arity_parts.at(3).is_zero());
    for (const auto& [k, p] : me.arity_parts)
        if (k != 3)
            CHECK(p.is_zero());
    CHECK_FALSE(arity_bracket(e.chart, e.hamiltonian, 1, 3).is_zero());
    CHECK(arity_bracket(e.chart, e.hamiltonian, 2, 3).is_zero());
    CHECK(arity_bracket(e.chart, e.hamiltonian, 2, 2).is_zero());
}

TEST_CASE("morphism examples")
{
    LInfty h = instances::heisenberg();
    CHECK(verify_morphism(identity_of(h), h, h).pass());

    LInfty g = instances::omni(2);
    LInfty N = new_two_term(g);
    REQUIRE(N == oracle::omni_new_two_term(2));
    TwoTermMorphism F = canonical_morphism(g);
    CHECK(verify_morphism(F, N, g).pass());

    TwoTermMorphism G = F;
    for (auto& [k, v] : G.F2)
        v = scaled(v, 2);
    Report r = verify_morphism(G, N, g);
    CHECK_FALSE(get(r, "(ii) F0 l2(x,y) - l2'(F0x,F0y) = l1' F2(x,y)").pass);
    CHECK(get(r, "(i) F0 l1 = l1' F1").pass);

    CHECK_THROWS_AS(verify_morphism(F, instances::three_term_c(), g), std::invalid_argument);
    CHECK(is_two_term(h));
    CHECK_FALSE(is_two_term(instances::three_term_c()));
}

TEST_CASE("morphism into a non-strict target")
{
    auto K = instances::so3_form();
    LInfty g = instances::string_type(instances::so3(), &K);
    LInfty N = new_two_term(g);
    REQUIRE(N == oracle::string_new_two_term(instances::so3(), &K));
    Report r = verify_morphism(canonical_morphism(g), N, g);
    CHECK(r.pass());
    CHECK(get(r, "(iv) F2(l2(x,y),z) + c.p. + F1 l3 = l2'(F0x,F2(y,z)) + c.p. + l3'(F0x,F0y,F0z)").instances > 0);
}
