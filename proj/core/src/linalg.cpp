#include "linfkit/linalg.hpp"

#include <stdexcept>

namespace lk {

namespace {

int column_count(const Matrix& a, int ncols)
{
    if (a.empty()) {
        if (ncols < 0)
            throw std::invalid_argument("column count needed for an empty matrix");
        return ncols;
    }
    int n = static_cast<int>(a.front().size());
    for (const auto& r : a)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("ragged matrix rows");
    if (ncols >= 0 && ncols != n)
        throw std::invalid_argument("column count mismatch");
    return n;
}

std::vector<mpz_class> integer_row(const std::vector<Scalar>& r)
{
    mpz_class l = 1;
    for (const auto& x : r)
        if (x != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(r.size());
    for (const auto& x : r)
        out.push_back(x.get_num() * (l / x.get_den()));
    return out;
}

// Back substitution on the echelon form with the free columns fixed.
std::vector<Scalar> back_substitute(const Echelon& e, std::vector<Scalar> x, const std::vector<Scalar>* rhs)
{
    for (int r = static_cast<int>(e.pivots.size()) - 1; r >= 0; --r) {
        int p = e.pivots[r];
        Scalar acc = rhs ? (*rhs)[r] : Scalar(0);
        for (int c = p + 1; c < e.ncols; ++c)
            if (e.rows[r][c] != 0)
                acc -= Scalar(e.rows[r][c]) * x[c];
        x[p] = acc / Scalar(e.rows[r][p]);
    }
    return x;
}

}  // namespace

Echelon echelon(const Matrix& a, int ncols)
{
    Echelon e;
    e.ncols = column_count(a, ncols);
    auto& m = e.rows;
    for (const auto& r : a)
        m.push_back(integer_row(r));
    int nr = static_cast<int>(m.size());
    int row = 0;
    mpz_class prev = 1;
    for (int col = 0; col < e.ncols && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[row], m[piv]);
        for (int r = row + 1; r < nr; ++r) {
            for (int c = col + 1; c < e.ncols; ++c) {
                mpz_class v = m[row][col] * m[r][c] - m[r][col] * m[row][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = v;
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        e.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return e;
}

int rank(const Matrix& a, int ncols)
{
    return static_cast<int>(echelon(a, ncols).pivots.size());
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a, int ncols)
{
    Echelon e = echelon(a, ncols);
    std::vector<char> is_pivot(e.ncols, 0);
    for (int p : e.pivots)
        is_pivot[p] = 1;
    std::vector<std::vector<Scalar>> out;
    for (int f = 0; f < e.ncols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> x(e.ncols, Scalar(0));
        x[f] = 1;
        out.push_back(back_substitute(e, std::move(x), nullptr));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b, int ncols)
{
    int n = column_count(a, ncols);
    if (b.size() != a.size())
        throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r)
        aug[r].push_back(b[r]);
    Echelon e = echelon(aug, n + 1);
    if (!e.pivots.empty() && e.pivots.back() == n)
        return std::nullopt;
    Echelon lhs;
    lhs.ncols = n;
    lhs.pivots = e.pivots;
    std::vector<Scalar> rhs;
    for (auto& r : e.rows) {
        rhs.emplace_back(r[n]);
        r.pop_back();
    }
    lhs.rows = std::move(e.rows);
    return back_substitute(lhs, std::vector<Scalar>(n, Scalar(0)), &rhs);
}

}  // namespace lk
