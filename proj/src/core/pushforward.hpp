#ifndef BISHOP_CORE_PUSHFORWARD_HPP
#define BISHOP_CORE_PUSHFORWARD_HPP

#include <vector>

#include "error.hpp"
#include "surface_series.hpp"
#include "transform.hpp"

namespace bishop {

// z-image of a graph under a transform: c z + f(z, H(z, zbar)).
template <class S>
SurfaceSeries<S> transform_z_image(const SurfaceSeries<S>& H, const HoloTransform<S>& t, int D) {
    SurfaceSeries<S> F = substitute_graph(t.f, H, D);
    F.at(1, 0) += t.c;
    return F;
}

// w-image of a graph: H + g(z, H(z, zbar)).
template <class S>
SurfaceSeries<S> transform_w_image(const SurfaceSeries<S>& H, const HoloTransform<S>& t, int D) {
    return H.truncated(D) + substitute_graph(t.g, H, D);
}

namespace detail {

// d_z^j d_zbar^l (P) / (j! l!) for a homogeneous slice P of degree d.
template <class S>
SurfaceSeries<S> scaled_slice_derivative(const SurfaceSeries<S>& P, int d, int j, int l) {
    SurfaceSeries<S> out(P.degree());
    if (j + l > d) return out;
    // binomial rows C(alpha, j) and C(beta, l) built incrementally
    std::vector<S> cj(static_cast<size_t>(d) + 1), cl(static_cast<size_t>(d) + 1);
    for (int al = j; al <= d; ++al)
        cj[al] = (al == j) ? S(1) : cj[al - 1] * S(al) / S(al - j);
    for (int be = l; be <= d; ++be)
        cl[be] = (be == l) ? S(1) : cl[be - 1] * S(be) / S(be - l);
    for (int al = j; al <= d; ++al) {
        int be = d - al;
        if (be < l) break;
        const S& v = P.at(al, be);
        if (!v.is_zero()) out.at(al - j, be - l) = v * cj[al] * cl[be];
    }
    return out;
}

} // namespace detail

// Solve Hstar(c z + F2, conj) = psi for the transformed graph Hstar, where
// F2 = f(z, H) has order >= 2.  Substituting z -> z + F2/c into the rotated
// unknowns A~(z, zbar) = Hstar(c z, cbar zbar) turns the rotation into a
// coefficient scaling; the unit-order-two substitution is then inverted one
// homogeneous slice at a time with Taylor corrections pushed forward.
template <class S>
SurfaceSeries<S> pushforward(const SurfaceSeries<S>& H, const HoloTransform<S>& t) {
    int D = H.degree();
    require(H.at(0, 0).is_zero() && H.at(1, 0).is_zero() && H.at(0, 1).is_zero(),
            ErrorKind::argument, "pushforward needs a graph with vanishing constant and linear part");

    S cinv = t.c.inv();
    S cbinv = t.c.conj().inv();

    SurfaceSeries<S> u = substitute_graph(t.f, H, D) * cinv; // F2 / c
    SurfaceSeries<S> ub = u.conj_series();
    SurfaceSeries<S> psi = transform_w_image(H, t, D);

    int ord_u = u.ord().value_or(D + 1);
    hard_assert(ord_u >= 2, "transform z-perturbation must have order >= 2");

    // T[m][j] = u^j ub^(m-j); only mixed orders m with (ord_u-1)*m able to
    // land inside the truncation matter.  Powers and products are built on
    // first use: a slice of degree d never needs m beyond min(d, (D-d)/...).
    int mmax = (ord_u > D) ? 0 : (D - 2) / (ord_u - 1);
    std::vector<SurfaceSeries<S>> upow, ubpow;
    upow.push_back(SurfaceSeries<S>(D));
    upow[0].at(0, 0) = S(1);
    ubpow.push_back(upow[0]);
    std::vector<std::vector<SurfaceSeries<S>>> T;      // lazily filled
    std::vector<std::vector<char>> Tset;               // which entries exist
    auto table = [&](int j, int l) -> const SurfaceSeries<S>& {
        int m = j + l;
        while (static_cast<int>(upow.size()) <= j) upow.push_back(upow.back() * u);
        while (static_cast<int>(ubpow.size()) <= l) ubpow.push_back(ubpow.back() * ub);
        if (static_cast<int>(T.size()) <= m) {
            T.resize(static_cast<size_t>(m) + 1);
            Tset.resize(static_cast<size_t>(m) + 1);
        }
        auto& row = T[static_cast<size_t>(m)];
        auto& set = Tset[static_cast<size_t>(m)];
        if (row.empty()) {
            row.assign(static_cast<size_t>(m) + 1, SurfaceSeries<S>(0));
            set.assign(static_cast<size_t>(m) + 1, 0);
        }
        if (!set[static_cast<size_t>(j)]) {
            row[static_cast<size_t>(j)] = upow[static_cast<size_t>(j)] * ubpow[static_cast<size_t>(l)];
            set[static_cast<size_t>(j)] = 1;
        }
        return row[static_cast<size_t>(j)];
    };

    SurfaceSeries<S> At(D);   // rotated unknown A~
    SurfaceSeries<S> corr(D); // Taylor corrections from slices already fixed
    for (int d = 0; d <= D; ++d) {
        SurfaceSeries<S> slice(D);
        bool any = false;
        for (int al = 0; al <= d; ++al) {
            S v = psi.at(al, d - al) - corr.at(al, d - al);
            if (!v.is_zero()) {
                slice.at(al, d - al) = v;
                At.at(al, d - al) = std::move(v);
                any = true;
            }
        }
        if (!any) continue;
        int mcap = std::min({mmax, (ord_u > 1) ? (D - d) / (ord_u - 1) : 0, d});
        for (int m = 1; m <= mcap; ++m)
            for (int j = 0; j <= m; ++j) {
                SurfaceSeries<S> P = detail::scaled_slice_derivative(slice, d, j, m - j);
                if (!P.is_zero()) SurfaceSeries<S>::mul_acc(corr, P, table(j, m - j), S(1), d + 1);
            }
    }

    // undo the rotation scaling: Hstar_{ab} = At_{ab} c^{-a} cbar^{-b}
    SurfaceSeries<S> out(D);
    std::vector<S> ci(static_cast<size_t>(D) + 1), cbi(static_cast<size_t>(D) + 1);
    ci[0] = S(1);
    cbi[0] = S(1);
    for (int k = 1; k <= D; ++k) {
        ci[k] = ci[k - 1] * cinv;
        cbi[k] = cbi[k - 1] * cbinv;
    }
    for (int al = 0; al <= D; ++al)
        for (int be = 0; al + be <= D; ++be) {
            const S& v = At.at(al, be);
            if (!v.is_zero()) out.at(al, be) = v * ci[al] * cbi[be];
        }
    return out;
}

// Independent check: evaluate Hstar(F, conj F) - (H + g(z, H)) by direct
// substitution with incremental powers of F.  Deliberately shares no code
// with the slice solver above.
template <class S>
SurfaceSeries<S> pushforward_residual(const SurfaceSeries<S>& H, const HoloTransform<S>& t,
                                      const SurfaceSeries<S>& Hstar) {
    int D = std::min(H.degree(), Hstar.degree());
    SurfaceSeries<S> F = transform_z_image(H, t, D);
    SurfaceSeries<S> Fb = F.conj_series();

    std::vector<SurfaceSeries<S>> Fpow;
    Fpow.push_back(SurfaceSeries<S>(D));
    Fpow[0].at(0, 0) = S(1);

    // row_be = sum_al Hstar_{al,be} F^al, then fold in powers of conj F;
    // powers of F and conj F are extended only as far as Hstar's support asks.
    SurfaceSeries<S> acc(D);
    SurfaceSeries<S> Fbpow(D);
    Fbpow.at(0, 0) = S(1);
    int bcur = 0;
    for (int be = 0; be <= D; ++be) {
        SurfaceSeries<S> row(D);
        bool any = false;
        for (int al = 0; al + be <= D; ++al) {
            const S& v = Hstar.at(al, be);
            if (v.is_zero()) continue;
            any = true;
            while (static_cast<int>(Fpow.size()) <= al) Fpow.push_back(Fpow.back() * F);
            row = row + Fpow[static_cast<size_t>(al)] * v;
        }
        if (any) {
            while (bcur < be) {
                Fbpow = Fbpow * Fb;
                ++bcur;
            }
            SurfaceSeries<S>::mul_acc(acc, row, Fbpow, S(1), 0);
        }
    }
    return acc - transform_w_image(H, t, D);
}

// True when Hstar is the graph of the image surface of H under t.
template <class S>
bool pushforward_verified(const SurfaceSeries<S>& H, const HoloTransform<S>& t,
                          const SurfaceSeries<S>& Hstar) {
    return pushforward_residual(H, t, Hstar).is_zero();
}

} // namespace bishop

#endif
