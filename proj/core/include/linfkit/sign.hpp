#pragma once

#include <span>
#include <vector>

namespace lk {

// Sign picked up by sorting (x_{perm[0]}, ..., x_{perm[n-1]}) back to
// (x_0, ..., x_{n-1}) when swapping neighbours of degrees d, d' costs
// (-1)^{d d'}. With with_sgn the result is sgn(perm) * Ksgn(perm).
// Throws std::invalid_argument on a non-bijection or a length mismatch.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees, bool with_sgn = false);

int permutation_parity(std::span<const int> perm);

// All (i, n-i)-unshuffles as index lists: the first i entries increase,
// the remaining n-i increase.
std::vector<std::vector<int>> unshuffles(int n, int i);

inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace lk
