#ifndef BISHOP_CORE_ONEVAR_HPP
#define BISHOP_CORE_ONEVAR_HPP

#include <optional>
#include <vector>

#include "error.hpp"
#include "rat.hpp"

namespace bishop {

// One-variable truncated series; exponents 0..trunc are reliable.
template <class S>
class OneVarSeries {
public:
    explicit OneVarSeries(int trunc) : c_(static_cast<size_t>(trunc) + 1) {
        require(trunc >= 0, ErrorKind::argument, "negative truncation order");
    }

    static OneVarSeries variable(int trunc) {
        OneVarSeries v(trunc);
        if (trunc >= 1) v.at(1) = S(1);
        return v;
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }

    const S& at(int k) const { return c_[check(k)]; }
    S& at(int k) { return c_[check(k)]; }

    std::optional<int> ord() const {
        for (int k = 0; k <= trunc(); ++k)
            if (!c_[k].is_zero()) return k;
        return std::nullopt;
    }

    OneVarSeries truncated(int t) const {
        OneVarSeries out(t);
        for (int k = 0; k <= std::min(t, trunc()); ++k) out.at(k) = c_[k];
        return out;
    }

    OneVarSeries derivative() const {
        OneVarSeries out(trunc() == 0 ? 0 : trunc() - 1);
        for (int k = 1; k <= trunc(); ++k) out.at(k - 1) = c_[k] * S(k);
        return out;
    }

    // Multiply by the monomial x^k (shifting truncation window up).
    OneVarSeries shifted(int k) const {
        OneVarSeries out(trunc() + k);
        for (int j = 0; j <= trunc(); ++j) out.at(j + k) = c_[j];
        return out;
    }

    OneVarSeries operator-() const {
        OneVarSeries out(trunc());
        for (int k = 0; k <= trunc(); ++k) out.at(k) = -c_[k];
        return out;
    }

    friend OneVarSeries operator+(const OneVarSeries& x, const OneVarSeries& y) {
        OneVarSeries out = x.truncated(std::min(x.trunc(), y.trunc()));
        for (int k = 0; k <= out.trunc(); ++k) out.at(k) += y.at(k);
        return out;
    }

    friend OneVarSeries operator-(const OneVarSeries& x, const OneVarSeries& y) {
        OneVarSeries out = x.truncated(std::min(x.trunc(), y.trunc()));
        for (int k = 0; k <= out.trunc(); ++k) out.at(k) -= y.at(k);
        return out;
    }

    friend OneVarSeries operator*(const OneVarSeries& x, const S& s) {
        OneVarSeries out = x;
        for (auto& v : out.c_) v = v * s;
        return out;
    }

    friend OneVarSeries operator*(const OneVarSeries& x, const OneVarSeries& y) {
        OneVarSeries out(std::min(x.trunc(), y.trunc()));
        for (int i = 0; i <= std::min(x.trunc(), out.trunc()); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= out.trunc() && j <= y.trunc(); ++j)
                if (!y.c_[j].is_zero()) S::addmul(out.at(i + j), x.c_[i], y.c_[j]);
        }
        return out;
    }

    bool operator==(const OneVarSeries& o) const { return c_ == o.c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    size_t check(int k) const {
        hard_assert(k >= 0 && k < static_cast<int>(c_.size()), "one-variable series index out of range");
        return static_cast<size_t>(k);
    }

    std::vector<S> c_;
};

// a(b(x)) for ord(b) >= 1, truncated at min available order; Horner.
template <class S>
OneVarSeries<S> compose(const OneVarSeries<S>& a, const OneVarSeries<S>& b) {
    require(b.at(0).is_zero(), ErrorKind::argument, "composition needs ord(inner) >= 1");
    int t = std::min(a.trunc(), b.trunc());
    OneVarSeries<S> out(t);
    for (int k = std::min(a.trunc(), t); k >= 0; --k) {
        if (!out.is_zero()) out = out * b.truncated(t);
        out.at(0) += a.at(k);
    }
    return out;
}

// Compositional inverse of a = c1*x + O(x^2), c1 invertible:
// returns b with a(b(x)) = x to truncation.
template <class S>
OneVarSeries<S> revert(const OneVarSeries<S>& a) {
    require(a.at(0).is_zero(), ErrorKind::argument, "revert: nonzero constant term");
    require(!a.at(1).is_zero(), ErrorKind::argument, "revert: vanishing linear coefficient");
    int t = a.trunc();
    S c1inv = a.at(1).inv();
    OneVarSeries<S> b(t);
    if (t >= 1) b.at(1) = c1inv;
    // Determine b order by order from the coefficient of x^n in a(b(x)) = x.
    for (int n = 2; n <= t; ++n) {
        OneVarSeries<S> ab = compose(a.truncated(n), b.truncated(n));
        b.at(n) = -ab.at(n) * c1inv;
    }
    return b;
}

// For a = x^s * u(x) with u(0) = 1: the branch r = x * u(x)^{1/s} with
// r^s = a to truncation.  Binomial series with incrementally built rational
// binomial coefficients.
template <class S>
OneVarSeries<S> nth_root_unit(const OneVarSeries<S>& a, int s) {
    require(s >= 1, ErrorKind::argument, "nth_root_unit: order must be positive");
    auto o = a.ord();
    require(o && *o == s, ErrorKind::argument, "nth_root_unit: leading exponent must equal s");
    int t = a.trunc() - s;
    OneVarSeries<S> u(t); // a / x^s
    for (int k = 0; k <= t; ++k) u.at(k) = a.at(k + s);
    require(u.at(0).is_one(), ErrorKind::argument, "nth_root_unit: unit part must start at 1");
    OneVarSeries<S> v = u;
    v.at(0) = S(0); // u - 1, ord >= 1
    // u^{1/s} = sum_k C(1/s, k) (u-1)^k
    OneVarSeries<S> root(t);
    root.at(0) = S(1);
    OneVarSeries<S> pw(t);
    pw.at(0) = S(1);
    S binom(1);
    S sinv = S(s).inv();
    for (int k = 1; k <= t; ++k) {
        pw = pw * v;
        if (pw.is_zero()) break;
        binom = binom * (sinv - S(k - 1)) / S(k);
        root = root + pw * binom;
    }
    return root.shifted(1).truncated(t + 1);
}

} // namespace bishop

#endif
