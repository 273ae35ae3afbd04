#ifndef BISHOP_CORE_INVARIANTS_HPP
#define BISHOP_CORE_INVARIANTS_HPP

#include <numeric>
#include <optional>
#include <vector>

#include "error.hpp"
#include "moser.hpp"
#include "pushforward.hpp"
#include "surface_series.hpp"

namespace bishop {

// Complete invariant system of a vanishing-Bishop-invariant surface to degree
// D: the leading harmonic degree s and the table of higher harmonic
// coefficients lambda_{ks+j}, k >= 1, 2 <= j <= s-1.  Unique up to the
// rotation action lambda_{ks+j} -> zeta_s^{jl} lambda_{ks+j}.
template <class S>
struct NormalForm {
    struct Entry {
        int k, j;
        S value;
        int degree(int s) const { return k * s + j; }
    };

    int s = 0;
    int D = 0;
    std::vector<Entry> table; // all slots with ks+j <= D, ascending degree

    // table slots are determined by (s, D) alone
    static NormalForm zero(int s, int D) {
        require(s >= 3, ErrorKind::argument, "leading harmonic degree must be at least 3");
        require(D >= s, ErrorKind::argument, "truncation below the leading harmonic degree");
        NormalForm nf;
        nf.s = s;
        nf.D = D;
        for (int m = s + 2; m <= D; ++m) {
            int j = m % s;
            if (j >= 2) nf.table.push_back({m / s, j, S(0)});
        }
        return nf;
    }

    S& at_degree(int m) {
        for (auto& e : table)
            if (e.degree(s) == m) return e.value;
        fail(ErrorKind::internal, "no invariant slot at this degree");
    }

    bool all_zero() const {
        for (const auto& e : table)
            if (!e.value.is_zero()) return false;
        return true;
    }

    // graph of w = z zbar + 2Re{ z^s + sum lambda_{ks+j} z^{ks+j} }
    SurfaceSeries<S> surface() const {
        SurfaceSeries<S> H = SurfaceSeries<S>::quadric(D);
        H.at(s, 0) = S(1);
        H.at(0, s) = S(1);
        for (const auto& e : table) {
            int m = e.degree(s);
            H.at(m, 0) = e.value;
            H.at(0, m) = e.value.conj();
        }
        return H;
    }
};

// Rotation subgroup of Z_s: {0, d, 2d, ...} of order s/d.
struct RotationSubgroup {
    int s = 0;
    int d = 1; // generator index; divides s
    int order() const { return s / d; }
};

namespace detail {

// One elimination step: remove every non-harmonic degree-d term, leaving
// 2Re{b z^d}; returns b and advances the surface.
template <class S>
S eliminate_degree(SurfaceSeries<S>& H, int d) {
    SurfaceSeries<S> slice = H.homogeneous_part(d);
    S b = slice.at(d, 0);
    if (slice.is_zero()) return b;
    MoserSolution<S> sol = moser_solve(slice, d, true);
    if (!sol.f.is_zero() || !sol.g.is_zero()) {
        int D = H.degree();
        HoloTransform<S> t(S(1), -sol.f.truncated(D), -sol.g.truncated(D));
        H = pushforward(H, t);
    }
    hard_assert(H.at(d, 0) == b, "harmonic coefficient moved by elimination");
    return b;
}

} // namespace detail

// Lowest degree whose harmonic term survives elimination of all lower
// non-harmonic terms; empty when the surface is the quadric to degree D.
template <class S>
std::optional<int> detect_moser_s(const SurfaceSeries<S>& H, int D) {
    require(H.degree() >= D, ErrorKind::truncation, "detection degree exceeds truncation");
    SurfaceSeries<S> cur = H.truncated(D);
    require(cur.is_admissible(), ErrorKind::admissibility, "surface is not an admissible graph");
    for (int d = 3; d <= D; ++d)
        if (!detail::eliminate_degree(cur, d).is_zero()) return d;
    return std::nullopt;
}

// Smallest rotation index l with lambda^(1)_{ks+j} = zeta_s^{jl} lambda^(2)_{ks+j}
// on the common truncation; empty means inequivalent to that degree.
template <class S>
std::optional<int> equivalent(const NormalForm<S>& nf1, const NormalForm<S>& nf2) {
    if (nf1.s != nf2.s) return std::nullopt;
    int s = nf1.s;
    int Dmin = std::min(nf1.D, nf2.D);
    for (int l = 0; l < s; ++l) {
        bool ok = true;
        for (size_t i = 0; i < nf1.table.size() && ok; ++i) {
            const auto& e1 = nf1.table[i];
            if (e1.degree(s) > Dmin) break;
            const auto& e2 = nf2.table[i];
            hard_assert(e1.k == e2.k && e1.j == e2.j, "invariant tables misaligned");
            if (e1.value != S::root_of_unity(s, static_cast<long>(e1.j) * l) * e2.value) ok = false;
        }
        if (ok) return l;
    }
    return std::nullopt;
}

// Rotations l preserving the table are exactly the multiples of
// d = lcm_{j in J} s / gcd(s, j), J = {j with some lambda_{ks+j} != 0}.
template <class S>
RotationSubgroup automorphism_group(const NormalForm<S>& nf) {
    RotationSubgroup grp;
    grp.s = nf.s;
    grp.d = 1;
    for (const auto& e : nf.table)
        if (!e.value.is_zero()) grp.d = std::lcm(grp.d, nf.s / std::gcd(nf.s, e.j));
    return grp;
}

template <class S>
NormalForm<S> rotate_normal_form(const NormalForm<S>& nf, int l) {
    require(l >= 0 && l < nf.s, ErrorKind::argument, "rotation index out of range");
    NormalForm<S> out = nf;
    for (auto& e : out.table)
        e.value = S::root_of_unity(nf.s, static_cast<long>(e.j) * l) * e.value;
    return out;
}

} // namespace bishop

#endif
