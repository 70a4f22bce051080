#include "linfkit/courant.hpp"
#include "linfkit/generate.hpp"
#include "linfkit/ikeda_uchino.hpp"
#include "linfkit/io.hpp"
#include "linfkit/linalg.hpp"
#include "linfkit/linfty.hpp"
#include "linfkit/quasi_groupoid.hpp"
#include "linfkit/schouten.hpp"
#include "linfkit/sign.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace lk;

namespace {

LInfty string_so3K()
{
    auto K = instances::so3_form();
    return instances::string_type(instances::so3(), &K);
}

void BM_KoszulSign(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::vector<int> perm(n), deg(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < n; ++i)
        deg[i] = i % 3 - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(koszul_sign(perm, deg, true));
}
BENCHMARK(BM_KoszulSign)->Arg(4)->Arg(8)->Arg(16);

void BM_Kernel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> c(-5, 5);
    Matrix m(n, std::vector<Scalar>(n + 2));
    for (auto& row : m)
        for (auto& x : row)
            x = Scalar(c(rng)) / (1 + static_cast<int>(rng() % 4));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_basis(m, n + 2));
}
BENCHMARK(BM_Kernel)->Arg(8)->Arg(16)->Arg(32);

void BM_Encode(benchmark::State& state)
{
    LInfty g = new_two_term(instances::omni(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(hamiltonian_encode(g, 2));
}
BENCHMARK(BM_Encode);

void BM_HigherJacobi(benchmark::State& state)
{
    LInfty g = new_two_term(instances::omni(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_higher_jacobi(g, 4));
}
BENCHMARK(BM_HigherJacobi)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_MasterEquation(benchmark::State& state)
{
    LInfty g = new_two_term(instances::omni(static_cast<int>(state.range(0))));
    Encoding e = hamiltonian_encode(g, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_master_equation(e.chart, e.hamiltonian));
}
BENCHMARK(BM_MasterEquation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_MasterEquation3Term(benchmark::State& state)
{
    Rng rng(3);
    LInfty g = random_gauge(instances::three_term_e(), 3, rng);
    Encoding e = hamiltonian_encode(g, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_master_equation(e.chart, e.hamiltonian));
}
BENCHMARK(BM_MasterEquation3Term)->Unit(benchmark::kMillisecond);

void BM_NewTwoTerm(benchmark::State& state)
{
    LInfty g = string_so3K();
    for (auto _ : state)
        benchmark::DoNotOptimize(new_two_term(g));
}
BENCHMARK(BM_NewTwoTerm)->Unit(benchmark::kMicrosecond);

void BM_CourantAxioms(benchmark::State& state)
{
    CourantData cd = courant_from_2term(instances::heisenberg());
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_courant_axioms(cd, cap));
}
BENCHMARK(BM_CourantAxioms)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_QuasiPoisson(benchmark::State& state)
{
    GroupoidBivector P = groupoid_bivector(string_so3K());
    PolyMultivector phi = groupoid_phi(P);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_quasi_poisson(P, phi));
}
BENCHMARK(BM_QuasiPoisson)->Unit(benchmark::kMillisecond);

void BM_IkedaUchinoAxioms(benchmark::State& state)
{
    IkedaUchinoData d = iu_from_3term(instances::three_term_c());
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_iu_axioms(d, 1));
}
BENCHMARK(BM_IkedaUchinoAxioms)->Unit(benchmark::kMillisecond);

void BM_Schouten(benchmark::State& state)
{
    std::mt19937_64 rng(4);
    const int N = static_cast<int>(state.range(0));
    std::uniform_int_distribution<int> dir(0, N - 1), e(0, 2), c(-3, 3);
    PolyMultivector pi(N);
    for (int t = 0; t < 3 * N; ++t) {
        std::vector<int> ex(N);
        for (auto& x : ex)
            x = e(rng) % 2;
        pi.add({dir(rng), dir(rng)}, ex, Scalar(c(rng)));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(schouten_bracket(pi, pi));
}
BENCHMARK(BM_Schouten)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_ParseSerialize(benchmark::State& state)
{
    std::string text = serialize_structure(new_two_term(instances::omni(2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(serialize_structure(parse_structure_file(text)));
}
BENCHMARK(BM_ParseSerialize)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
