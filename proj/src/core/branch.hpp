#ifndef BISHOP_CORE_BRANCH_HPP
#define BISHOP_CORE_BRANCH_HPP

#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numeric_scalar.hpp"
#include "onevar.hpp"
#include "surface_series.hpp"

namespace bishop {

// Complexification of a Hermitian graph: zbar becomes an independent variable
// zeta, so w = z zeta + z^s + zeta^s + E(z, zeta).  The coefficient table is
// reused verbatim; only the reading of the second index changes.
template <class S>
struct ComplexifiedSurface {
    int s = 0;
    SurfaceSeries<S> full; // z zeta + z^s + zeta^s + E
    SurfaceSeries<S> E;    // the perturbation alone

    SurfaceSeries<S> restrict_to_real() const { return full; } // zeta = zbar
};

template <class S>
ComplexifiedSurface<S> complexify(const SurfaceSeries<S>& H) {
    require(H.is_hermitian(), ErrorKind::admissibility, "complexification needs a Hermitian graph");
    require(H.is_admissible(), ErrorKind::admissibility, "surface is not an admissible graph");
    int s = 0;
    for (int d = 3; d <= H.degree() && s == 0; ++d)
        if (!H.at(d, 0).is_zero()) s = d;
    require(s >= 3, ErrorKind::admissibility, "no pure-z term: branch curve degenerates");
    require(H.at(s, 0).is_one(), ErrorKind::admissibility,
            "leading pure-z coefficient must be exactly 1");
    ComplexifiedSurface<S> C{s, H, H};
    C.E.at(1, 1) = S(0);
    C.E.at(s, 0) = S(0);
    C.E.at(0, s) = S(0);
    return C;
}

// sum_{alpha,beta} e_{alpha beta} h(zeta)^alpha zeta^beta, for ord(h) >= 1.
template <class S>
OneVarSeries<S> eval_on_curve(const SurfaceSeries<S>& E, const OneVarSeries<S>& h, int order) {
    OneVarSeries<S> out(order);
    OneVarSeries<S> hpow(order);
    hpow.at(0) = S(1);
    int ord_h = h.ord().value_or(order + 1);
    hard_assert(ord_h >= 1, "curve substitution needs ord >= 1");
    for (int al = 0; al <= E.degree(); ++al) {
        if (al > 0) {
            if (static_cast<long>(al) * ord_h > order) break;
            hpow = hpow * h.truncated(order);
        }
        for (int be = 0; al + be <= E.degree() && be <= order; ++be) {
            const S& c = E.at(al, be);
            if (c.is_zero()) continue;
            for (int k = 0; k + be <= order; ++k)
                if (!hpow.at(k).is_zero()) S::addmul(out.at(k + be), c, hpow.at(k));
        }
    }
    return out;
}

// The projection (z, zeta, w) -> (z, w) off the complexified surface is
// generically s-to-1; it branches along z = h1(zeta), w = h2(zeta):
//   h1 solves  z + s zeta^(s-1) + E_zeta(z, zeta) = 0,
//   h2(zeta) = h1 zeta + h1^s + zeta^s + E(h1, zeta).
template <class S>
std::pair<OneVarSeries<S>, OneVarSeries<S>> branch_curve(const ComplexifiedSurface<S>& C, int order) {
    int s = C.s;
    require(order >= s, ErrorKind::truncation, "order below the branch curve's leading terms");
    require(C.full.degree() >= order, ErrorKind::truncation,
            "surface truncation insufficient for the requested order");

    SurfaceSeries<S> Ez = C.E.dzbar();
    OneVarSeries<S> h1(order);
    h1.at(s - 1) = S(-s);
    // contraction: each pass gains at least one zeta-order
    for (int pass = 0; pass <= order; ++pass) {
        OneVarSeries<S> next(order);
        next.at(s - 1) = S(-s);
        next = next - eval_on_curve(Ez, h1, order);
        if (next == h1) break;
        h1 = std::move(next);
    }
    // defining equation must hold exactly to the working order
    {
        OneVarSeries<S> res = h1;
        res.at(s - 1) += S(s);
        res = res + eval_on_curve(Ez, h1, order);
        hard_assert(res.is_zero(), "branch curve equation not satisfied");
    }

    OneVarSeries<S> h2(order);
    OneVarSeries<S> h1pow = h1;
    for (int i = 1; i < s; ++i) h1pow = h1pow * h1; // h1^s
    for (int k = 0; k <= order; ++k) {
        S v = h1pow.at(k);
        if (k >= 1) v += h1.at(k - 1); // h1 * zeta
        if (k == s) v += S(1);
        h2.at(k) = std::move(v);
    }
    h2 = h2 + eval_on_curve(C.E, h1, order);
    hard_assert(h2.at(s) == S(1 - s), "branch curve w-component has wrong leading term");
    return {std::move(h1), std::move(h2)};
}

// One of the s branch points over w = u > 0:
//   A_j(u) = P(omega_j (u/(s-1))^(1/s)),  omega_j = zeta_{2s}^{-(2j+1)}.
// P and the substitution descriptor are kept separate so every stored
// coefficient stays in the base field.
template <class S>
struct PuiseuxBranch {
    OneVarSeries<S> P; // h1 composed with the inverse of h3; leading term -s tau^(s-1)
    int s = 0;
    int j = 0;     // root-of-unity index
    int order = 0; // reliable tau-order of P
};

template <class S>
std::vector<PuiseuxBranch<S>> branch_points(const ComplexifiedSurface<S>& C, int order) {
    auto [h1, h2] = branch_curve(C, order);
    int s = C.s;
    // -h2/(s-1) = zeta^s (1 + ...) has the unique root h3 = zeta(1 + ...)
    OneVarSeries<S> a = h2 * (S(-1) / S(s - 1));
    OneVarSeries<S> h3 = nth_root_unit(a, s);
    OneVarSeries<S> h3inv = revert(h3);
    OneVarSeries<S> P = compose(h1, h3inv);
    hard_assert(P.at(s - 1) == S(-s), "branch expansion has wrong leading coefficient");
    for (int k = 0; k < s - 1; ++k)
        hard_assert(P.at(k).is_zero(), "branch expansion has terms below the leading order");
    std::vector<PuiseuxBranch<S>> out;
    for (int j = 0; j < s; ++j) out.push_back({P, s, j, P.trunc()});
    return out;
}

// Leading exponent (in u) of H(A_j(u), conj A_j(u)), computed with
// v = (u/(s-1))^(1/s) as a formal positive variable: conj(v) = v, conjugation
// acts on coefficients and on omega_j only.  Returned as (numerator,
// denominator) of the exponent; must exceed 1 for every admissible surface.
template <class S>
std::pair<long, long> membership_order(const ComplexifiedSurface<S>& C, const PuiseuxBranch<S>& br) {
    int s = br.s;
    int order = br.order;
    S omega = S::root_of_unity(2 * s, -(2 * br.j + 1));
    OneVarSeries<S> A(order), Abar(order);
    for (int k = 0; k <= order; ++k) {
        S w = S(1);
        for (int i = 0; i < k; ++i) w = w * omega; // omega^k
        A.at(k) = br.P.at(k) * w;
        Abar.at(k) = A.at(k).conj();
    }
    // evaluate H at (A, Abar) with incremental powers of both arguments
    const SurfaceSeries<S>& H = C.full;
    int ordA = A.ord().value_or(order + 1);
    int ordAb = Abar.ord().value_or(order + 1);
    OneVarSeries<S> acc(order);
    OneVarSeries<S> Apow(order);
    Apow.at(0) = S(1);
    for (int al = 0; al <= H.degree(); ++al) {
        if (al > 0) {
            if (static_cast<long>(al) * ordA > order) break;
            Apow = Apow * A;
        }
        OneVarSeries<S> row(order);
        bool any = false;
        OneVarSeries<S> Abpow(order);
        Abpow.at(0) = S(1);
        for (int be = 0; al + be <= H.degree(); ++be) {
            if (be > 0) {
                if (static_cast<long>(be) * ordAb > order) break;
                Abpow = Abpow * Abar;
            }
            const S& c = H.at(al, be);
            if (!c.is_zero()) {
                row = row + Abpow * c;
                any = true;
            }
        }
        if (any) acc = acc + Apow * row;
    }
    auto o = acc.ord();
    require(o.has_value(), ErrorKind::truncation, "membership value vanishes to working order");
    // v-order n corresponds to u-exponent n/s
    long g = std::gcd(static_cast<long>(*o), static_cast<long>(s));
    return {*o / g, s / g};
}

// Structured constant s (s-1)^((1-s)/s) |zeta_{2s} - zeta_{2s}^(1+2j)| scaling
// the leading term of the pairwise hyperbolic distances; the u-exponent of
// that leading term is (s-2)/(2s).
struct LeadingConstant {
    int s = 0;
    int j = 0;                   // modulus factor |zeta_{2s} - zeta_{2s}^{1+2j}|
    mpq_class rational;          // the factor s
    mpq_class radical_exponent;  // exponent of (s-1): (1-s)/s
    mpq_class u_exponent;        // (s-2)/(2s)
    double value = 0;            // float evaluation of the product
};

inline LeadingConstant leading_hyperbolic_constant(int s, int j) {
    require(s >= 3, ErrorKind::argument, "need s >= 3");
    require(j >= 1 && j <= s - 1, ErrorKind::argument, "branch pair index out of range");
    LeadingConstant lc;
    lc.s = s;
    lc.j = j;
    lc.rational = s;
    lc.radical_exponent = mpq_class(1 - s, s);
    lc.u_exponent = mpq_class(s - 2, 2 * s);
    lc.u_exponent.canonicalize();
    lc.radical_exponent.canonicalize();
    // |zeta_{2s} - zeta_{2s}^{1+2j}| = 2 sin(pi j / s); evaluate in extended
    // precision, round once at the end
    NumReal pi = boost::math::constants::pi<NumReal>();
    NumReal v = s * pow(NumReal(s - 1), NumReal(1 - s) / s) * 2 * sin(pi * j / s);
    lc.value = v.convert_to<double>();
    return lc;
}

} // namespace bishop

#endif
