#ifndef BISHOP_CORE_CYCLOTOMIC_HPP
#define BISHOP_CORE_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "error.hpp"
#include "rat.hpp"

namespace bishop {

// The cyclotomic field Q(zeta_n), elements represented as residues modulo the
// n-th cyclotomic polynomial Phi_n.  Immutable; instances are interned per
// conductor and live for the whole process.
class CycloField {
public:
    static const CycloField& get(int conductor);

    int conductor() const { return n_; }
    int degree() const { return deg_; } // = phi(n)

    // x^j reduced modulo Phi_n, for 0 <= j < max_power(). Coefficient vectors
    // of length degree().
    const std::vector<mpq_class>& power(int j) const { return pow_[j]; }
    int max_power() const { return static_cast<int>(pow_.size()); }

    const std::vector<mpq_class>& modulus() const { return phi_; }

private:
    explicit CycloField(int n);

    int n_;
    int deg_;
    std::vector<mpq_class> phi_;
    std::vector<std::vector<mpq_class>> pow_;
};

// A scalar in a conjugation-closed computable subfield of C: an element of
// Q(zeta_n).  Binary operations promote both operands into the compositum
// Q(zeta_lcm).  Equality and zero tests are exact.
class Cyclo {
public:
    Cyclo() : F_(&CycloField::get(1)), c_(1) {}
    Cyclo(long v) : Cyclo() { c_[0] = v; }
    Cyclo(const mpq_class& q) : Cyclo() { c_[0] = q; }

    static Cyclo gaussian(const mpq_class& re, const mpq_class& im);
    // Primitive n-th root of unity zeta_n.
    static Cyclo zeta(int n) { return root_of_unity(n, 1); }
    // zeta_n^k (k may be negative).
    static Cyclo root_of_unity(int n, long k);

    const CycloField& field() const { return *F_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_real() const { return *this == conj(); }
    // Throws unless the element lies in Q.
    mpq_class rational_value() const;

    Cyclo conj() const; // zeta_n -> zeta_n^{n-1}
    Cyclo inv() const;
    Cyclo real_part() const { return (*this + conj()) / Cyclo(2); }
    Cyclo imag_part() const; // lifts into a field containing i when needed

    // Re-express in Q(zeta_m); the target conductor must be a multiple of the
    // smallest conductor containing this element.
    Cyclo lifted(const CycloField& target) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // acc += a * b, with a same-field fast path used by the series kernels.
    static void addmul(Cyclo& acc, const Cyclo& a, const Cyclo& b);

    // All nonzero exact scalars are equally good pivots.
    static double pivot_weight(const Cyclo&) { return 1.0; }

    std::string str() const;

    double to_double_re() const;
    double to_double_im() const;

private:
    Cyclo(const CycloField* F, std::vector<mpq_class> c) : F_(F), c_(std::move(c)) {}

    static const CycloField* common_field(const Cyclo& a, const Cyclo& b);
    void lift_inplace(const CycloField& target);
    static void mul_same_field(std::vector<mpq_class>& out, const Cyclo& a, const Cyclo& b);

    const CycloField* F_;
    std::vector<mpq_class> c_; // size F_->degree()
};

inline Cyclo conj(const Cyclo& x) { return x.conj(); }
inline bool is_zero(const Cyclo& x) { return x.is_zero(); }

} // namespace bishop

#endif
