#ifndef BISHOP_CORE_TRANSFORM_HPP
#define BISHOP_CORE_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "error.hpp"
#include "holo2.hpp"

namespace bishop {

// Formal transformation (z, w) -> (c z + f(z, w), w + g(z, w)) with
// wt(f) >= 2, wt(g) >= 3 in the weighting wt(z) = 1, wt(w) = 2, so the quadric
// part of an admissible surface is preserved exactly when |c| = 1.
template <class S>
struct HoloTransform {
    S c;
    HoloSeries2<S> f; // no constant or linear-in-z term; w term allowed
    HoloSeries2<S> g; // no constant, z, z^2 or w term; zw allowed

    HoloTransform(S c_, HoloSeries2<S> f_, HoloSeries2<S> g_)
        : c(std::move(c_)), f(std::move(f_)), g(std::move(g_)) {
        require(f.weight_bound() == g.weight_bound(), ErrorKind::argument, "transform components at different truncation weights");
        require(!c.is_zero(), ErrorKind::argument, "transform has vanishing linear coefficient");
        validate();
    }

    int weight_bound() const { return f.weight_bound(); }

    static HoloTransform identity(int W) {
        return HoloTransform(S(1), HoloSeries2<S>(W), HoloSeries2<S>(W));
    }

    static HoloTransform rotation(const S& c, int W) {
        return HoloTransform(c, HoloSeries2<S>(W), HoloSeries2<S>(W));
    }

    void validate() const {
        require(f.at(0, 0).is_zero() && f.at(1, 0).is_zero(), ErrorKind::argument,
                "transform f-part has weight < 2 terms");
        require(g.at(0, 0).is_zero() && g.at(1, 0).is_zero() && g.at(2, 0).is_zero() &&
                    g.at(0, 1).is_zero(),
                ErrorKind::argument, "transform g-part has weight < 3 terms");
    }
};

// t2 after t1: apply t1 first.  The result carries the common truncation weight.
template <class S>
HoloTransform<S> compose(const HoloTransform<S>& t2, const HoloTransform<S>& t1) {
    int W = std::min(t1.weight_bound(), t2.weight_bound());
    // inner components of t1, truncated to W
    HoloSeries2<S> A(W); // c1 z + f1
    A.at(1, 0) = t1.c;
    A = A + t1.f.truncated(W);
    HoloSeries2<S> B(W); // w + g1
    B.at(0, 1) = S(1);
    B = B + t1.g.truncated(W);

    int amax = 0, bmax = 0;
    detail::scan_exponents(t2.f, W, amax, bmax);
    detail::scan_exponents(t2.g, W, amax, bmax);
    detail::PairPowers<S> pw(A, B, amax, bmax, W);
    HoloSeries2<S> f = t1.f.truncated(W) * t2.c + detail::substitute_with_powers(t2.f, pw, W);
    HoloSeries2<S> g = t1.g.truncated(W) + detail::substitute_with_powers(t2.g, pw, W);
    return HoloTransform<S>(t2.c * t1.c, std::move(f), std::move(g));
}

// Compose a list of transforms given in application order (fs[0] acts first)
// by balanced pairwise reduction: near-identity factors combine cheaply with
// their sparse neighbors before anything dense is built.
template <class S>
HoloTransform<S> compose_all(std::vector<HoloTransform<S>> fs, int W) {
    if (fs.empty()) return HoloTransform<S>::identity(W);
    while (fs.size() > 1) {
        std::vector<HoloTransform<S>> next;
        next.reserve((fs.size() + 1) / 2);
        size_t i = 0;
        for (; i + 1 < fs.size(); i += 2) next.push_back(compose(fs[i + 1], fs[i]));
        if (i < fs.size()) next.push_back(std::move(fs[i]));
        fs = std::move(next);
    }
    return std::move(fs[0]);
}

} // namespace bishop

#endif
