#ifndef BISHOP_CORE_MOSER_HPP
#define BISHOP_CORE_MOSER_HPP

#include <utility>
#include <vector>

#include "error.hpp"
#include "holo2.hpp"
#include "linsolve.hpp"
#include "surface_series.hpp"

namespace bishop {

// Solution of the degree-m linearized equation
//   L(f, g, phi) = g(z, z zbar) - 2 Re{ zbar f(z, z zbar) + phi(z) } = G,
// with the uniqueness normalization f = z^2 f* and phi = harmonic * z^m.
template <class S>
struct MoserSolution {
    HoloSeries2<S> f; // monomials z^a w^b with a + 2b = m - 1, a >= 2
    HoloSeries2<S> g; // monomials z^a w^b with a + 2b = m
    S harmonic;       // coefficient of z^m in phi
    int m;
};

// L(f, g, phi) as a homogeneous degree-m series in (z, zbar); the w slot of
// f and g is the quadric z zbar, so z^a w^b lands on (a + b, b).
template <class S>
SurfaceSeries<S> moser_apply(const MoserSolution<S>& sol, int D) {
    int m = sol.m;
    require(D >= m, ErrorKind::truncation, "truncation degree below operator degree");
    SurfaceSeries<S> out(D);
    sol.g.for_each_nonzero([&](int a, int b, const S& v) {
        hard_assert(a + 2 * b == m, "g-part not of the operator degree");
        out.at(a + b, b) += v;
    });
    sol.f.for_each_nonzero([&](int a, int b, const S& v) {
        hard_assert(a + 2 * b == m - 1 && a >= 2, "f-part violates the z^2 normalization");
        out.at(a + b, b + 1) -= v;
        out.at(b + 1, a + b) -= v.conj();
    });
    out.at(m, 0) -= sol.harmonic;
    out.at(0, m) -= sol.harmonic.conj();
    return out;
}

// Solve L(f, g, phi) = G for homogeneous real-valued (Hermitian) G of degree
// m >= 3.  Conjugated coefficients enter the equations, so each unknown is
// doubled (x and a formally independent x'), the conjugate of every equation
// is appended, and x' = conj(x) is asserted on the solution of the resulting
// square 2(m+1) x 2(m+1) exact system.
template <class S>
MoserSolution<S> moser_solve(const SurfaceSeries<S>& G, int m, bool allow_harmonic) {
    require(m >= 3, ErrorKind::argument, "operator degree must be at least 3");
    require(G.degree() >= m, ErrorKind::truncation, "right-hand side truncated below degree m");
    for (int d = 0; d <= G.degree(); ++d)
        require(d == m || G.homogeneous_part_is_zero(d), ErrorKind::argument,
                "right-hand side must be homogeneous of the operator degree");
    for (int al = 0; al <= m; ++al)
        require(G.at(al, m - al) == G.at(m - al, al).conj(), ErrorKind::internal,
                "right-hand side of the linearized equation is not real-valued");
    require(allow_harmonic || (G.at(m, 0).is_zero() && G.at(0, m).is_zero()), ErrorKind::internal,
            "harmonic terms present where none can be absorbed");

    // unknown layout: f_(a,b) for a+2b=m-1, a>=2; g_(a,b) for a+2b=m; then c
    std::vector<std::pair<int, int>> fmon, gmon;
    for (int b = 0; 2 * b <= m - 3; ++b) fmon.emplace_back(m - 1 - 2 * b, b);
    for (int b = 0; 2 * b <= m; ++b) gmon.emplace_back(m - 2 * b, b);
    size_t nf = fmon.size(), ng = gmon.size();
    size_t half = nf + ng + 1; // primed copies follow at offset `half`
    size_t n = 2 * half;
    hard_assert(n == 2 * static_cast<size_t>(m + 1), "unexpected unknown count");

    std::vector<std::vector<S>> A(n, std::vector<S>(n, S(0)));
    std::vector<S> rhs(n, S(0));
    // rows 0..m: coefficient of z^al zbar^be in L; rows m+1..: conjugates
    for (int al = 0; al <= m; ++al) {
        int be = m - al;
        auto& row = A[static_cast<size_t>(al)];
        if (al >= be) row[nf + static_cast<size_t>(be)] += S(1); // g_(al-be, be)
        if (be >= 1 && al - be + 1 >= 2)
            row[static_cast<size_t>((m - 1 - (al - be + 1)) / 2)] -= S(1); // f_(al-be+1, be-1)
        if (al >= 1 && be - al + 1 >= 2)
            row[half + static_cast<size_t>((m - 1 - (be - al + 1)) / 2)] -= S(1); // conj f_(be-al+1, al-1)
        if (al == m) row[nf + ng] -= S(1);  // -c
        if (be == m) row[n - 1] -= S(1);    // -conj c
        rhs[static_cast<size_t>(al)] = G.at(al, be);
    }
    for (size_t r = 0; r <= static_cast<size_t>(m); ++r) {
        auto& row = A[half + r];
        for (size_t j = 0; j < half; ++j) {
            row[half + j] = A[r][j].conj();
            row[j] = A[r][half + j].conj();
        }
        rhs[half + r] = rhs[r].conj();
    }

    auto sol = solve_linear(std::move(A), std::move(rhs));
    require(sol.consistent && sol.unique, ErrorKind::internal,
            "linearized normalization system is singular");
    for (size_t j = 0; j < half; ++j)
        require(sol.x[half + j] == sol.x[j].conj(), ErrorKind::internal,
                "linearized system solution is not conjugation-consistent");

    MoserSolution<S> out{HoloSeries2<S>(m), HoloSeries2<S>(m), sol.x[nf + ng], m};
    for (size_t k = 0; k < nf; ++k) out.f.at(fmon[k].first, fmon[k].second) = sol.x[k];
    for (size_t k = 0; k < ng; ++k) out.g.at(gmon[k].first, gmon[k].second) = sol.x[nf + k];
    hard_assert(out.g.at(m, 0).is_zero(), "pure z^m term must fall into the harmonic slot");
    hard_assert(allow_harmonic || out.harmonic.is_zero(), "unexpected harmonic component");

    // round trip against the operator evaluated independently of the matrix
    SurfaceSeries<S> back = moser_apply(out, m);
    for (int al = 0; al <= m; ++al)
        require(back.at(al, m - al) == G.at(al, m - al), ErrorKind::internal,
                "linearized equation round trip failed");
    return out;
}

} // namespace bishop

#endif
