#ifndef BISHOP_CORE_SURFACE_SERIES_HPP
#define BISHOP_CORE_SURFACE_SERIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"

namespace bishop {

// Truncated formal graph series H(z, zbar) = sum a_{alpha beta} z^alpha zbar^beta,
// stored densely over the triangle alpha + beta <= D.  Values are immutable in
// spirit: every operation returns a fresh series, and binary operations
// truncate to the minimum reliable degree of the operands.
template <class S>
class SurfaceSeries {
public:
    explicit SurfaceSeries(int degree) : deg_(degree), a_(size_for(degree)) {
        require(degree >= 0, ErrorKind::argument, "negative truncation degree");
    }

    static SurfaceSeries quadric(int degree) {
        SurfaceSeries h(degree);
        if (degree >= 2) h.at(1, 1) = S(1);
        return h;
    }

    int degree() const { return deg_; }

    const S& at(int alpha, int beta) const { return a_[idx(alpha, beta)]; }
    S& at(int alpha, int beta) { return a_[idx(alpha, beta)]; }

    // Total-degree order; empty = identically zero to truncation.
    std::optional<int> ord() const {
        for (int d = 0; d <= deg_; ++d)
            for (int al = 0; al <= d; ++al)
                if (!at(al, d - al).is_zero()) return d;
        return std::nullopt;
    }

    // Huang-Yin weight: wt(z) = 1, wt(zbar) = s - 1.
    std::optional<int> hy_weight(int s) const {
        require(s >= 3, ErrorKind::argument, "Huang-Yin weight needs s >= 3");
        std::optional<int> best;
        for (int al = 0; al <= deg_; ++al)
            for (int be = 0; al + be <= deg_; ++be)
                if (!at(al, be).is_zero()) {
                    int w = al + (s - 1) * be;
                    if (!best || w < *best) best = w;
                }
        return best;
    }

    SurfaceSeries truncated(int degree) const {
        SurfaceSeries out(degree);
        int d = std::min(degree, deg_);
        for (int al = 0; al <= d; ++al)
            for (int be = 0; al + be <= d; ++be) out.at(al, be) = at(al, be);
        return out;
    }

    SurfaceSeries homogeneous_part(int d) const {
        SurfaceSeries out(deg_);
        if (d <= deg_)
            for (int al = 0; al <= d; ++al) out.at(al, d - al) = at(al, d - al);
        return out;
    }

    bool homogeneous_part_is_zero(int d) const {
        if (d > deg_) return true;
        for (int al = 0; al <= d; ++al)
            if (!at(al, d - al).is_zero()) return false;
        return true;
    }

    SurfaceSeries conj_series() const {
        SurfaceSeries out(deg_);
        for (int al = 0; al <= deg_; ++al)
            for (int be = 0; al + be <= deg_; ++be) out.at(al, be) = at(be, al).conj();
        return out;
    }

    bool is_hermitian() const {
        for (int al = 0; al <= deg_; ++al)
            for (int be = al; al + be <= deg_; ++be)
                if (at(al, be) != at(be, al).conj()) return false;
        return true;
    }

    // Admissible Bishop graph with vanishing Bishop invariant:
    // no constant/linear part, a_{11} = 1, no z^2 / zbar^2.
    bool is_admissible() const {
        if (deg_ < 2) return false;
        return at(0, 0).is_zero() && at(1, 0).is_zero() && at(0, 1).is_zero() && at(1, 1).is_one() &&
               at(2, 0).is_zero() && at(0, 2).is_zero();
    }

    SurfaceSeries dz() const {
        SurfaceSeries out(deg_ == 0 ? 0 : deg_ - 1);
        for (int al = 1; al <= deg_; ++al)
            for (int be = 0; al + be <= deg_; ++be) out.at(al - 1, be) = at(al, be) * S(al);
        return out;
    }

    SurfaceSeries dzbar() const {
        SurfaceSeries out(deg_ == 0 ? 0 : deg_ - 1);
        for (int al = 0; al <= deg_; ++al)
            for (int be = 1; al + be <= deg_; ++be) out.at(al, be - 1) = at(al, be) * S(be);
        return out;
    }

    SurfaceSeries operator-() const {
        SurfaceSeries out(deg_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
        return out;
    }

    friend SurfaceSeries operator+(const SurfaceSeries& x, const SurfaceSeries& y) {
        SurfaceSeries out = x.truncated(std::min(x.deg_, y.deg_));
        for (int al = 0; al <= out.deg_; ++al)
            for (int be = 0; al + be <= out.deg_; ++be) out.at(al, be) += y.at(al, be);
        return out;
    }

    friend SurfaceSeries operator-(const SurfaceSeries& x, const SurfaceSeries& y) {
        SurfaceSeries out = x.truncated(std::min(x.deg_, y.deg_));
        for (int al = 0; al <= out.deg_; ++al)
            for (int be = 0; al + be <= out.deg_; ++be) out.at(al, be) -= y.at(al, be);
        return out;
    }

    friend SurfaceSeries operator*(const SurfaceSeries& x, const S& c) {
        SurfaceSeries out = x;
        for (auto& v : out.a_) v = v * c;
        return out;
    }

    friend SurfaceSeries operator*(const S& c, const SurfaceSeries& x) { return x * c; }

    friend SurfaceSeries operator*(const SurfaceSeries& x, const SurfaceSeries& y) {
        SurfaceSeries out(std::min(x.deg_, y.deg_));
        mul_acc(out, x, y, S(1), 0);
        return out;
    }

    // out += c * (x * y), keeping only product terms of total degree >= mindeg.
    // The slice-scheduled pushforward solver leans on this.  The nonzero
    // support of y is gathered once, bucketed by total degree, so the inner
    // loop touches only entries that can land inside the truncation.
    static void mul_acc(SurfaceSeries& out, const SurfaceSeries& x, const SurfaceSeries& y, const S& c,
                        int mindeg) {
        int D = out.deg_;
        int ydeg = std::min(y.deg_, D);
        struct Ent {
            int a, b;
            const S* v;
        };
        std::vector<Ent> ys;
        std::vector<size_t> start(static_cast<size_t>(ydeg) + 2, 0);
        for (int d = 0; d <= ydeg; ++d) {
            start[static_cast<size_t>(d)] = ys.size();
            for (int a2 = 0; a2 <= d; ++a2) {
                const S& yv = y.at(a2, d - a2);
                if (!yv.is_zero()) ys.push_back({a2, d - a2, &yv});
            }
        }
        start[static_cast<size_t>(ydeg) + 1] = ys.size();
        if (ys.empty()) return;
        bool unit = c.is_one();
        for (int a1 = 0; a1 <= std::min(x.deg_, D); ++a1)
            for (int b1 = 0; a1 + b1 <= std::min(x.deg_, D); ++b1) {
                const S& xv = x.at(a1, b1);
                if (xv.is_zero()) continue;
                S xc = unit ? xv : xv * c;
                int rem = std::min(ydeg, D - a1 - b1);
                int dlo = std::max(0, mindeg - a1 - b1);
                if (dlo > rem) continue;
                size_t i = start[static_cast<size_t>(dlo)];
                size_t end = start[static_cast<size_t>(rem) + 1];
                for (; i < end; ++i) {
                    const Ent& e = ys[i];
                    S::addmul(out.at(a1 + e.a, b1 + e.b), xc, *e.v);
                }
            }
    }

    bool operator==(const SurfaceSeries& o) const {
        if (deg_ != o.deg_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    static size_t size_for(int degree) {
        return static_cast<size_t>(degree + 1) * static_cast<size_t>(degree + 2) / 2;
    }

    size_t idx(int alpha, int beta) const {
        hard_assert(alpha >= 0 && beta >= 0 && alpha + beta <= deg_, "surface series index out of range");
        return static_cast<size_t>(alpha) * (2 * deg_ + 3 - alpha) / 2 + beta;
    }

    int deg_;
    std::vector<S> a_;
};

template <class S>
std::optional<int> ord(const SurfaceSeries<S>& h) {
    return h.ord();
}

template <class S>
SurfaceSeries<S> conj_series(const SurfaceSeries<S>& h) {
    return h.conj_series();
}

} // namespace bishop

#endif
