#include "linfkit/sign.hpp"

#include <stdexcept>

namespace lk {

namespace {

void check_perm(std::span<const int> perm)
{
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = 1;
    }
}

}  // namespace

int koszul_sign(std::span<const int> perm, std::span<const int> degrees, bool with_sgn)
{
    if (perm.size() != degrees.size())
        throw std::invalid_argument("permutation and degree list differ in length");
    check_perm(perm);
    int s = 1;
    const std::size_t n = perm.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (perm[a] > perm[b]) {
                long long dd = static_cast<long long>(degrees[perm[a]]) * degrees[perm[b]];
                if (dd % 2 != 0)
                    s = -s;
                if (with_sgn)
                    s = -s;
            }
    return s;
}

int permutation_parity(std::span<const int> perm)
{
    check_perm(perm);
    int s = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                s = -s;
    return s;
}

std::vector<std::vector<int>> unshuffles(int n, int i)
{
    std::vector<std::vector<int>> out;
    if (i < 0 || i > n)
        return out;
    std::vector<int> pick(i);
    for (int k = 0; k < i; ++k)
        pick[k] = k;
    while (true) {
        std::vector<int> perm = pick;
        std::vector<char> used(n, 0);
        for (int p : pick)
            used[p] = 1;
        for (int k = 0; k < n; ++k)
            if (!used[k])
                perm.push_back(k);
        out.push_back(std::move(perm));
        int k = i - 1;
        while (k >= 0 && pick[k] == n - i + k)
            --k;
        if (k < 0)
            break;
        ++pick[k];
        for (int j = k + 1; j < i; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace lk
