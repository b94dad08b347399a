#ifndef CONEQUANT_LINALG_HPP
#define CONEQUANT_LINALG_HPP

#include "conequant/rational.hpp"

#include <optional>
#include <vector>

namespace conequant {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Reduces m to row echelon form in place, returns the rank.
inline size_t row_echelon(RatMat& m)
{
    if (m.empty())
        return 0;
    size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[rank], m[piv]);
        Rat inv = Rat(1) / m[rank][c];
        for (size_t j = c; j < cols; ++j)
            m[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            Rat f = m[r][c];
            for (size_t j = c; j < cols; ++j)
                m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline size_t rank(RatMat m) { return row_echelon(m); }

struct LinearSolve {
    bool consistent = false;
    bool unique = false;
    RatVec solution; // one solution when consistent
};

/// Solves A x = b exactly.
inline LinearSolve solve(const RatMat& a, const RatVec& b)
{
    LinearSolve out;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    RatMat aug(rows, RatVec(cols + 1, Rat(0)));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c)
            aug[r][c] = a[r][c];
        aug[r][cols] = b[r];
    }
    row_echelon(aug);
    std::vector<long> pivot_col(rows, -1);
    size_t rk = 0;
    for (size_t r = 0; r < rows; ++r) {
        size_t c = 0;
        while (c < cols + 1 && aug[r][c] == 0)
            ++c;
        if (c == cols + 1)
            continue;
        if (c == cols)
            return out; // 0 = nonzero: inconsistent
        pivot_col[rk++] = static_cast<long>(c);
    }
    out.consistent = true;
    out.unique = (rk == cols);
    out.solution.assign(cols, Rat(0));
    for (size_t r = 0; r < rk; ++r)
        out.solution[static_cast<size_t>(pivot_col[r])] = aug[r][cols];
    return out;
}

} // namespace conequant

#endif
