#ifndef BISHOP_CORE_LINSOLVE_HPP
#define BISHOP_CORE_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "error.hpp"

namespace bishop {

template <class S>
struct LinearSolveResult {
    std::vector<S> x;
    int rank = 0;
    bool consistent = false;
    bool unique = false;
};

// Gaussian elimination on a dense m x n system A x = b.  Pivoting only needs
// exact nonzero tests for the algebraic scalars; for the floating scalar the
// per-column maximum-magnitude pivot is picked via pivot_weight().
template <class S>
LinearSolveResult<S> solve_linear(std::vector<std::vector<S>> A, std::vector<S> b) {
    size_t m = A.size();
    require(b.size() == m, ErrorKind::internal, "linear system shape mismatch");
    size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        hard_assert(row.size() == n, "ragged linear system");

    LinearSolveResult<S> res;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        size_t best = m;
        for (size_t i = r; i < m; ++i) {
            if (A[i][col].is_zero()) continue;
            if (best == m || S::pivot_weight(A[i][col]) > S::pivot_weight(A[best][col])) best = i;
        }
        if (best == m) continue;
        std::swap(A[r], A[best]);
        std::swap(b[r], b[best]);
        S inv = A[r][col].inv();
        for (size_t j = col; j < n; ++j) A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || A[i][col].is_zero()) continue;
            S factor = A[i][col];
            for (size_t j = col; j < n; ++j) A[i][j] = A[i][j] - factor * A[r][j];
            b[i] = b[i] - factor * b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    res.rank = static_cast<int>(r);
    res.consistent = true;
    for (size_t i = r; i < m; ++i)
        if (!b[i].is_zero()) res.consistent = false;
    res.unique = res.consistent && r == n;
    if (res.consistent) {
        res.x.assign(n, S(0));
        for (size_t k = 0; k < r; ++k) res.x[pivot_col[k]] = b[k];
    }
    return res;
}

} // namespace bishop

#endif
