#ifndef BISHOP_CORE_HOLO2_HPP
#define BISHOP_CORE_HOLO2_HPP

#include <optional>
#include <vector>

#include "error.hpp"
#include "surface_series.hpp"

namespace bishop {

// Holomorphic series h(z, w) truncated by normal weight (z has weight 1,
// w has weight 2): monomials z^a w^b with a + 2b <= W are stored.
template <class S>
class HoloSeries2 {
public:
    explicit HoloSeries2(int weight_bound) : w_(weight_bound), c_(size_for(weight_bound)) {
        require(weight_bound >= 0, ErrorKind::argument, "negative weight bound");
    }

    int weight_bound() const { return w_; }

    const S& at(int a, int b) const { return c_[idx(a, b)]; }
    S& at(int a, int b) { return c_[idx(a, b)]; }

    bool contains(int a, int b) const { return a >= 0 && b >= 0 && a + 2 * b <= w_; }

    // Smallest l with a nonzero weight-l component; empty if zero.
    std::optional<int> wt_nor() const {
        std::optional<int> best;
        for_each_nonzero([&](int a, int b, const S&) {
            int l = a + 2 * b;
            if (!best || l < *best) best = l;
        });
        return best;
    }

    HoloSeries2 normal_weight_part(int l) const {
        HoloSeries2 out(w_);
        if (l <= w_)
            for (int b = 0; 2 * b <= l; ++b) {
                int a = l - 2 * b;
                out.at(a, b) = at(a, b);
            }
        return out;
    }

    HoloSeries2 truncated(int weight_bound) const {
        HoloSeries2 out(weight_bound);
        for_each_nonzero([&](int a, int b, const S& v) {
            if (out.contains(a, b)) out.at(a, b) = v;
        });
        return out;
    }

    HoloSeries2 operator-() const {
        HoloSeries2 out(w_);
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
        return out;
    }

    friend HoloSeries2 operator+(const HoloSeries2& x, const HoloSeries2& y) {
        HoloSeries2 out = x.truncated(std::min(x.w_, y.w_));
        y.for_each_nonzero([&](int a, int b, const S& v) {
            if (out.contains(a, b)) out.at(a, b) += v;
        });
        return out;
    }

    friend HoloSeries2 operator-(const HoloSeries2& x, const HoloSeries2& y) {
        HoloSeries2 out = x.truncated(std::min(x.w_, y.w_));
        y.for_each_nonzero([&](int a, int b, const S& v) {
            if (out.contains(a, b)) out.at(a, b) -= v;
        });
        return out;
    }

    friend HoloSeries2 operator*(const HoloSeries2& x, const S& s) {
        HoloSeries2 out = x;
        for (auto& v : out.c_) v = v * s;
        return out;
    }

    friend HoloSeries2 operator*(const HoloSeries2& x, const HoloSeries2& y) {
        HoloSeries2 out(std::min(x.w_, y.w_));
        int W = out.w_;
        // gather y's nonzeros once, bucketed by weight a+2b
        struct Ent {
            int a, b;
            const S* v;
        };
        std::vector<Ent> ys;
        std::vector<size_t> start(static_cast<size_t>(W) + 2, 0);
        for (int wy = 0; wy <= W; ++wy) {
            start[static_cast<size_t>(wy)] = ys.size();
            for (int b = 0; 2 * b <= wy && 2 * b <= y.w_; ++b) {
                int a = wy - 2 * b;
                if (a + 2 * b > y.w_) continue;
                const S& yv = y.at(a, b);
                if (!yv.is_zero()) ys.push_back({a, b, &yv});
            }
        }
        start[static_cast<size_t>(W) + 1] = ys.size();
        if (ys.empty()) return out;
        x.for_each_nonzero([&](int a1, int b1, const S& xv) {
            int rem = W - a1 - 2 * b1;
            if (rem < 0) return;
            size_t end = start[static_cast<size_t>(rem) + 1];
            for (size_t i = 0; i < end; ++i) {
                const Ent& e = ys[i];
                S::addmul(out.at(a1 + e.a, b1 + e.b), xv, *e.v);
            }
        });
        return out;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const HoloSeries2& o) const { return w_ == o.w_ && c_ == o.c_; }

    template <class Fn>
    void for_each_nonzero(Fn&& fn) const {
        for (int b = 0; 2 * b <= w_; ++b)
            for (int a = 0; a + 2 * b <= w_; ++a) {
                const S& v = at(a, b);
                if (!v.is_zero()) fn(a, b, v);
            }
    }

private:
    static size_t size_for(int w) {
        size_t n = 0;
        for (int b = 0; 2 * b <= w; ++b) n += static_cast<size_t>(w - 2 * b + 1);
        return n;
    }

    size_t idx(int a, int b) const {
        hard_assert(a >= 0 && b >= 0 && a + 2 * b <= w_, "holo series index out of range");
        return static_cast<size_t>(b) * (w_ + 1) - static_cast<size_t>(b) * (b - 1) + a;
    }

    int w_;
    std::vector<S> c_;
};

// h(z, H(z, zbar)) truncated at total degree D.  This is the workhorse that
// realizes every "restrict to w = z zbar + ..." substitution.
template <class S>
SurfaceSeries<S> substitute_graph(const HoloSeries2<S>& h, const SurfaceSeries<S>& H, int D) {
    require(H.degree() >= D, ErrorKind::truncation, "substitute_graph: graph truncated below target degree");
    SurfaceSeries<S> out(D);
    SurfaceSeries<S> Ht = H.truncated(D);
    SurfaceSeries<S> Hpow = SurfaceSeries<S>(D); // H^b, built as far as h needs it
    Hpow.at(0, 0) = S(1);
    int bcur = 0;
    for (int b = 0; 2 * b <= h.weight_bound() && 2 * b <= D; ++b) {
        bool row_any = false;
        for (int a = 0; a + 2 * b <= h.weight_bound() && !row_any; ++a)
            row_any = !h.at(a, b).is_zero();
        if (!row_any) continue;
        while (bcur < b) {
            Hpow = Hpow * Ht;
            ++bcur;
        }
        for (int a = 0; a + 2 * b <= h.weight_bound(); ++a) {
            const S& c = h.at(a, b);
            if (c.is_zero() || a > D) continue;
            for (int al = 0; al <= D - a; ++al)
                for (int be = 0; al + be <= D - a; ++be) {
                    const S& v = Hpow.at(al, be);
                    if (!v.is_zero()) S::addmul(out.at(al + a, be), c, v);
                }
        }
    }
    return out;
}

namespace detail {

// Power tables A^0..A^amax, B^0..B^bmax at truncation weight W, shared across
// several substitutions of the same pair.
template <class S>
struct PairPowers {
    std::vector<HoloSeries2<S>> Ap, Bp;

    PairPowers(const HoloSeries2<S>& A, const HoloSeries2<S>& B, int amax, int bmax, int W) {
        Ap.reserve(static_cast<size_t>(amax) + 1);
        Ap.emplace_back(W);
        Ap[0].at(0, 0) = S(1);
        for (int a = 1; a <= amax && a <= W; ++a) Ap.push_back(Ap.back() * A);
        Bp.reserve(static_cast<size_t>(bmax) + 1);
        Bp.emplace_back(W);
        Bp[0].at(0, 0) = S(1);
        for (int b = 1; b <= bmax && 2 * b <= W; ++b) Bp.push_back(Bp.back() * B);
    }
};

// h(A, B) from precomputed powers: one scalar-series accumulation per nonzero
// monomial of h and one series product per nonzero row of h.
template <class S>
HoloSeries2<S> substitute_with_powers(const HoloSeries2<S>& h, const PairPowers<S>& pw, int W) {
    HoloSeries2<S> out(W);
    for (int b = 0; 2 * b <= h.weight_bound(); ++b) {
        if (2 * b > W) break;
        HoloSeries2<S> row(W);
        bool any = false;
        for (int a = 0; a + 2 * b <= h.weight_bound(); ++a) {
            const S& c = h.at(a, b);
            if (c.is_zero() || a + 2 * b > W) continue;
            hard_assert(static_cast<size_t>(a) < pw.Ap.size(), "pair power table too short");
            pw.Ap[static_cast<size_t>(a)].for_each_nonzero(
                [&](int x, int y, const S& v) { S::addmul(row.at(x, y), c, v); });
            any = true;
        }
        if (any) {
            hard_assert(static_cast<size_t>(b) < pw.Bp.size(), "pair power table too short");
            out = out + row * pw.Bp[static_cast<size_t>(b)];
        }
    }
    return out;
}

template <class S>
void scan_exponents(const HoloSeries2<S>& h, int W, int& amax, int& bmax) {
    h.for_each_nonzero([&](int a, int b, const S&) {
        if (a + 2 * b > W) return;
        if (a > amax) amax = a;
        if (b > bmax) bmax = b;
    });
}

} // namespace detail

// h(A(z,w), B(z,w)) where A carries weight >= 1 and B weight >= 2; used for
// transform composition.
template <class S>
HoloSeries2<S> substitute_pair(const HoloSeries2<S>& h, const HoloSeries2<S>& A, const HoloSeries2<S>& B,
                               int W) {
    int amax = 0, bmax = 0;
    detail::scan_exponents(h, W, amax, bmax);
    detail::PairPowers<S> pw(A, B, amax, bmax, W);
    return detail::substitute_with_powers(h, pw, W);
}

} // namespace bishop

#endif
