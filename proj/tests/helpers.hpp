#ifndef BISHOP_TESTS_HELPERS_HPP
#define BISHOP_TESTS_HELPERS_HPP

#include <random>

#include "core/cyclotomic.hpp"
#include "core/surface_io.hpp"
#include "core/surface_series.hpp"
#include "core/transform.hpp"

namespace bishop::testutil {

inline SurfaceSeries<Cyclo> random_surface(std::uint64_t seed, int s, int D, int bound) {
    return parse_surface(generate_random(seed, s, D, bound));
}

inline mpq_class random_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Cyclo random_gaussian(std::mt19937_64& rng, int bound) {
    mpq_class re = random_rational(rng, bound);
    mpq_class im = random_rational(rng, bound);
    return Cyclo::gaussian(re, im);
}

// Random homogeneous Hermitian slice of degree m, as a degree-D series.
inline SurfaceSeries<Cyclo> random_hermitian_homogeneous(std::mt19937_64& rng, int m, int D,
                                                         int bound) {
    SurfaceSeries<Cyclo> G(D);
    for (int al = m; 2 * al >= m; --al) {
        int be = m - al;
        if (al == be) {
            G.at(al, be) = Cyclo(random_rational(rng, bound));
        } else {
            Cyclo v = random_gaussian(rng, bound);
            G.at(al, be) = v;
            G.at(be, al) = v.conj();
        }
    }
    return G;
}

// Random shape-legal transform: c a root of unity with c^s = 1, f and g with
// a few random monomials obeying the weight constraints, g not required to be
// real (full generality of the admissible transformation group's shape).
inline HoloTransform<Cyclo> random_transform(std::mt19937_64& rng, int s, int W, int bound,
                                             int nterms) {
    std::uniform_int_distribution<int> rot(0, s - 1);
    Cyclo c = Cyclo::root_of_unity(s, rot(rng));
    HoloSeries2<Cyclo> f(W), g(W);
    std::uniform_int_distribution<int> aw(0, W);
    for (int i = 0; i < nterms; ++i) {
        // f: z^a w^b with weight a + 2b >= 2, not the pure-z linear term
        int a = aw(rng) % (W + 1), b = aw(rng) % (W / 2 + 1);
        if (a + 2 * b <= W && a + 2 * b >= 2 && !(a == 1 && b == 0)) f.at(a, b) = random_gaussian(rng, bound);
        // g: weight >= 3, excluding z^2, w
        a = aw(rng) % (W + 1), b = aw(rng) % (W / 2 + 1);
        if (a + 2 * b <= W && a + 2 * b >= 3 && !(a == 2 && b == 0)) g.at(a, b) = random_gaussian(rng, bound);
    }
    return HoloTransform<Cyclo>(c, std::move(f), std::move(g));
}

// Random transform that maps Hermitian graphs to Hermitian graphs: the
// g-part depends only on w with real coefficients (so it is real on any
// graph), f is unconstrained.
inline HoloTransform<Cyclo> random_hermitian_transform(std::mt19937_64& rng, int s, int W,
                                                       int bound, int nterms) {
    std::uniform_int_distribution<int> rot(0, s - 1);
    Cyclo c = Cyclo::root_of_unity(s, rot(rng));
    HoloSeries2<Cyclo> f(W), g(W);
    std::uniform_int_distribution<int> aw(0, W);
    for (int i = 0; i < nterms; ++i) {
        int a = aw(rng) % (W + 1), b = aw(rng) % (W / 2 + 1);
        if (a + 2 * b <= W && a + 2 * b >= 2 && !(a == 1 && b == 0)) f.at(a, b) = random_gaussian(rng, bound);
        b = aw(rng) % (W / 2 + 1);
        if (b >= 2) g.at(0, b) = Cyclo(random_rational(rng, bound));
    }
    return HoloTransform<Cyclo>(c, std::move(f), std::move(g));
}

// Naive full-product oracle, quadratic loops, no truncation tricks shared
// with the library implementation.
inline SurfaceSeries<Cyclo> naive_product(const SurfaceSeries<Cyclo>& x,
                                          const SurfaceSeries<Cyclo>& y, int D) {
    SurfaceSeries<Cyclo> out(D);
    for (int a1 = 0; a1 <= x.degree(); ++a1)
        for (int b1 = 0; a1 + b1 <= x.degree(); ++b1) {
            if (x.at(a1, b1).is_zero()) continue;
            for (int a2 = 0; a2 <= y.degree(); ++a2)
                for (int b2 = 0; a2 + b2 <= y.degree(); ++b2) {
                    if (y.at(a2, b2).is_zero()) continue;
                    if (a1 + b1 + a2 + b2 > D) continue;
                    out.at(a1 + a2, b1 + b2) += x.at(a1, b1) * y.at(a2, b2);
                }
        }
    return out;
}

} // namespace bishop::testutil

#endif
