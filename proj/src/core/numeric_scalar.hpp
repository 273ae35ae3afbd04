#ifndef BISHOP_CORE_NUMERIC_SCALAR_HPP
#define BISHOP_CORE_NUMERIC_SCALAR_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <sstream>
#include <string>

#include "error.hpp"
#include "rat.hpp"

namespace bishop {

// 50-digit working precision; the numeric pipeline promises 1e-30, which
// leaves ~20 guard digits for cancellation in the series kernels.
using NumReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

// Complex arbitrary-precision scalar for the numeric (a_s-rescaling) mode.
// Mirrors the Cyclo interface used by the templated series kernels; equality
// and zero tests are tolerance-based, never exact.
class NumScalar {
public:
    static constexpr double kToleranceExp = -30;

    NumScalar() : re_(0), im_(0) {}
    NumScalar(long v) : re_(v), im_(0) {}
    NumScalar(const mpq_class& q) : re_(NumReal(q.get_num().get_str()) / NumReal(q.get_den().get_str())), im_(0) {}
    NumScalar(NumReal re, NumReal im) : re_(std::move(re)), im_(std::move(im)) {}

    static NumScalar root_of_unity(int n, long k) {
        NumReal angle = 2 * boost::math::constants::pi<NumReal>() * k / n;
        return NumScalar(cos(angle), sin(angle));
    }

    static NumReal tolerance() {
        static NumReal tol = pow(NumReal(10), kToleranceExp);
        return tol;
    }

    const NumReal& re() const { return re_; }
    const NumReal& im() const { return im_; }

    bool is_zero() const { return abs(re_) < tolerance() && abs(im_) < tolerance(); }
    bool is_one() const { return (*this - NumScalar(1)).is_zero(); }
    bool is_real() const { return abs(im_) < tolerance(); }

    NumScalar conj() const { return NumScalar(re_, -im_); }
    NumScalar inv() const {
        NumReal n2 = re_ * re_ + im_ * im_;
        require(n2 != 0, ErrorKind::argument, "division by zero");
        return NumScalar(re_ / n2, -im_ / n2);
    }
    NumScalar real_part() const { return NumScalar(re_, NumReal(0)); }
    NumScalar imag_part() const { return NumScalar(im_, NumReal(0)); }

    NumReal abs2() const { return re_ * re_ + im_ * im_; }

    NumScalar operator-() const { return NumScalar(-re_, -im_); }
    NumScalar& operator+=(const NumScalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    NumScalar& operator-=(const NumScalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    NumScalar& operator*=(const NumScalar& o) {
        NumReal r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    NumScalar& operator/=(const NumScalar& o) { return *this *= o.inv(); }

    friend NumScalar operator+(NumScalar a, const NumScalar& b) { return a += b; }
    friend NumScalar operator-(NumScalar a, const NumScalar& b) { return a -= b; }
    friend NumScalar operator*(NumScalar a, const NumScalar& b) { return a *= b; }
    friend NumScalar operator/(NumScalar a, const NumScalar& b) { return a /= b; }
    friend bool operator==(const NumScalar& a, const NumScalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const NumScalar& a, const NumScalar& b) { return !(a == b); }

    static double pivot_weight(const NumScalar& x) { return x.abs2().convert_to<double>(); }

    static void addmul(NumScalar& acc, const NumScalar& a, const NumScalar& b) {
        acc.re_ += a.re_ * b.re_ - a.im_ * b.im_;
        acc.im_ += a.re_ * b.im_ + a.im_ * b.re_;
    }

    std::string str() const {
        std::ostringstream os;
        os.precision(36);
        os << re_;
        if (!is_real()) os << (im_ > 0 ? "+" : "") << im_ << "i";
        return os.str();
    }

    double to_double_re() const { return re_.convert_to<double>(); }
    double to_double_im() const { return im_.convert_to<double>(); }

private:
    NumReal re_, im_;
};

inline NumScalar conj(const NumScalar& x) { return x.conj(); }
inline bool is_zero(const NumScalar& x) { return x.is_zero(); }

} // namespace bishop

#endif
