#include "linfkit/homotopy_poisson.hpp"

#include "linfkit/linfty.hpp"

#include <stdexcept>

namespace lk {

int max_arity(const HomotopyPoissonPresentation& P)
{
    int k = 0;
    for (const auto& [m, c] : P.hamiltonian.terms)
        k = std::max(k, momentum_order(P.chart, m));
    return k;
}

Report validate(const HomotopyPoissonPresentation& P)
{
    Report rep;
    const int want = P.base_degree + 2;
    rep.check("deg H = n+2");
    for (const auto& [m, c] : P.hamiltonian.terms) {
        int d = monomial_degree(P.chart, m);
        rep.record("deg H = n+2", d == want, to_string(P.chart, m) + " has degree " + std::to_string(d));
    }
    if (P.chart.shift() != P.base_degree + 1)
        rep.fail("chart shift = n+1", "shift " + std::to_string(P.chart.shift()));
    rep.merge(check_master_equation(P.chart, P.hamiltonian).report);
    return rep;
}

Poly derived_bracket_extract(const HomotopyPoissonPresentation& P, const std::vector<Poly>& args)
{
    for (const auto& a : args)
        if (has_momentum(P.chart, a))
            throw std::invalid_argument("derived bracket arguments must be functions on the base");
    return derived_bracket(P.chart, P.hamiltonian, args);
}

Poly canonical_transform_residual(const HomotopyPoissonPresentation& P, const Poly& alpha)
{
    if (has_momentum(P.chart, alpha))
        throw std::invalid_argument("alpha must be fiber-constant");
    auto d = homogeneous_degree(P.chart, alpha);
    if (!alpha.is_zero() && (!d || *d != P.base_degree + 1))
        throw std::invalid_argument("alpha must be homogeneous of degree n+1");
    Poly r = P.hamiltonian, term = P.hamiltonian;
    const int bound = max_arity(P) + 1;
    for (int k = 1; k <= bound; ++k) {
        term = bracket(P.chart, alpha, term) * Scalar(-1, k);
        if (term.is_zero())
            break;
        r += term;
    }
    return restrict_to_base(P.chart, r);
}

Poly mc_residual(const HomotopyPoissonPresentation& P, const Poly& alpha, bool skip_linear)
{
    Poly r;
    if (alpha.is_zero())
        return r;
    const int kmax = max_arity(P);
    Poly f = P.hamiltonian;
    Scalar fact = 1;
    for (int i = 1; i <= kmax; ++i) {
        f = bracket(P.chart, alpha, f);
        fact *= i;
        if (f.is_zero())
            break;
        if (i == 1 && skip_linear)
            continue;
        r += restrict_to_base(P.chart, f) * Scalar((i % 2 ? -1 : 1) / fact);
    }
    return r;
}

TwistedPoissonChart twisted_poisson_presentation(int N, const std::vector<Scalar>& H)
{
    TwistedPoissonChart t{{Chart(2), Poly{}, 1}, {}, {}, {}, {}};
    Chart& c = t.presentation.chart;
    for (int i = 0; i < N; ++i)
        t.x.push_back(c.add("x" + std::to_string(i + 1), 0));
    for (int i = 0; i < N; ++i)
        t.p.push_back(c.add("p" + std::to_string(i + 1), 1));
    for (int i = 0; i < N; ++i) {
        t.X.push_back(c.add("X" + std::to_string(i + 1), 2, true));
        c.pair(t.x[i], t.X[i]);
    }
    for (int i = 0; i < N; ++i) {
        t.P.push_back(c.add("P" + std::to_string(i + 1), 1, true));
        c.pair(t.p[i], t.P[i]);
    }
    Poly& th = t.presentation.hamiltonian;
    for (int i = 0; i < N; ++i)
        th += mul(c, Poly::variable(t.X[i]), Poly::variable(t.P[i]));
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = j + 1; k < N; ++k, ++idx) {
                if (idx >= H.size())
                    throw std::invalid_argument("too few H coefficients");
                if (H[idx] != 0)
                    th += product(c, {Poly::variable(t.P[i]), Poly::variable(t.P[j]), Poly::variable(t.P[k])}) * H[idx];
            }
    if (idx != H.size())
        throw std::invalid_argument("too many H coefficients");
    return t;
}

}  // namespace lk
