#include "cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bishop {

namespace {

using Poly = std::vector<mpq_class>; // coefficients, low to high

int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division with remainder; quotient in q, remainder left in r.
void poly_divmod(Poly r, const Poly& d, Poly& q) {
    int dd = poly_deg(d);
    hard_assert(dd >= 0, "division by zero polynomial");
    int rd = poly_deg(r);
    q.assign(std::max(rd - dd + 1, 1), mpq_class(0));
    while (rd >= dd) {
        mpq_class f = r[rd] / d[dd];
        q[rd - dd] = f;
        for (int i = 0; i <= dd; ++i) r[rd - dd + i] -= f * d[i];
        rd = poly_deg(r);
    }
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Phi_n by the recursion Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
Poly cyclotomic_poly(int n, std::map<int, Poly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly xn(n + 1, mpq_class(0));
    xn[0] = -1;
    xn[n] = 1;
    Poly denom{mpq_class(1)};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) denom = poly_mul(denom, cyclotomic_poly(d, cache));
    Poly q;
    poly_divmod(xn, denom, q);
    q.resize(poly_deg(q) + 1);
    cache[n] = q;
    return q;
}

} // namespace

const CycloField& CycloField::get(int conductor) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = fields[conductor];
    if (!slot) slot.reset(new CycloField(conductor));
    return *slot;
}

CycloField::CycloField(int n) : n_(n) {
    require(n >= 1, ErrorKind::argument, "cyclotomic conductor must be positive");
    std::map<int, Poly> cache;
    phi_ = cyclotomic_poly(n, cache);
    deg_ = poly_deg(phi_);
    hard_assert(deg_ == euler_phi(n), "cyclotomic degree mismatch");

    int maxpow = std::max(2 * deg_ - 1, n + 1);
    pow_.resize(maxpow);
    for (int j = 0; j < maxpow; ++j) {
        pow_[j].assign(deg_, mpq_class(0));
        if (j < deg_) {
            pow_[j][j] = 1;
        } else {
            // x * pow_[j-1] mod Phi
            const auto& prev = pow_[j - 1];
            auto& cur = pow_[j];
            for (int i = 0; i + 1 < deg_; ++i) cur[i + 1] = prev[i];
            const mpq_class& top = prev[deg_ - 1];
            if (top != 0)
                for (int i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
        }
    }
}

Cyclo Cyclo::gaussian(const mpq_class& re, const mpq_class& im) {
    if (im == 0) return Cyclo(re);
    const CycloField& F = CycloField::get(4);
    return Cyclo(&F, {re, im});
}

Cyclo Cyclo::root_of_unity(int n, long k) {
    require(n >= 1, ErrorKind::argument, "root of unity order must be positive");
    long r = k % n;
    if (r < 0) r += n;
    const CycloField& F = CycloField::get(n);
    return Cyclo(&F, F.power(static_cast<int>(r)));
}

bool Cyclo::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Cyclo::rational_value() const {
    require(is_rational(), ErrorKind::internal, "scalar is not rational");
    return c_[0];
}

Cyclo Cyclo::conj() const {
    int n = F_->conductor();
    if (n <= 2) return *this;
    std::vector<mpq_class> out(F_->degree(), mpq_class(0));
    for (int k = 0; k < F_->degree(); ++k) {
        if (c_[k] == 0) continue;
        const auto& p = F_->power(static_cast<int>((static_cast<long>(k) * (n - 1)) % n));
        for (int i = 0; i < F_->degree(); ++i) out[i] += c_[k] * p[i];
    }
    return Cyclo(F_, std::move(out));
}

Cyclo Cyclo::inv() const {
    require(!is_zero(), ErrorKind::argument, "division by zero");
    int deg = F_->degree();
    if (deg == 1) return Cyclo(F_, {1 / c_[0]});
    // Extended Euclid in Q[x] for gcd(c, Phi) = 1.
    Poly r0(F_->modulus());
    Poly r1(c_);
    Poly s0{mpq_class(0)}, s1{mpq_class(1)}; // coefficients of c in the Bezout combination
    while (true) {
        int d1 = poly_deg(r1);
        hard_assert(d1 >= 0, "cyclotomic inverse: zero remainder before unit");
        if (d1 == 0) break;
        Poly q;
        poly_divmod(r0, r1, q);
        Poly r2 = r0;
        {
            Poly qr = poly_mul(q, r1);
            r2.resize(std::max(r2.size(), qr.size()), mpq_class(0));
            for (size_t i = 0; i < qr.size(); ++i) r2[i] -= qr[i];
        }
        Poly s2 = s0;
        {
            Poly qs = poly_mul(q, s1);
            s2.resize(std::max(s2.size(), qs.size()), mpq_class(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    mpq_class unit = r1[0];
    std::vector<mpq_class> out(deg, mpq_class(0));
    for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(deg); ++i) out[i] = s1[i] / unit;
    return Cyclo(F_, std::move(out));
}

Cyclo Cyclo::imag_part() const {
    Cyclo diff = *this - conj();
    if (diff.is_zero()) return Cyclo(0);
    Cyclo two_i = Cyclo::root_of_unity(4, 1) * Cyclo(2);
    return diff / two_i;
}

Cyclo Cyclo::lifted(const CycloField& target) const {
    if (&target == F_) return *this;
    int m = F_->conductor(), n = target.conductor();
    require(n % m == 0, ErrorKind::internal, "cannot lift between incompatible cyclotomic fields");
    int stride = n / m;
    std::vector<mpq_class> out(target.degree(), mpq_class(0));
    for (int k = 0; k < F_->degree(); ++k) {
        if (c_[k] == 0) continue;
        const auto& p = target.power(k * stride);
        for (int i = 0; i < target.degree(); ++i) out[i] += c_[k] * p[i];
    }
    return Cyclo(&target, std::move(out));
}

const CycloField* Cyclo::common_field(const Cyclo& a, const Cyclo& b) {
    if (a.F_ == b.F_) return a.F_;
    int lcm = std::lcm(a.F_->conductor(), b.F_->conductor());
    return &CycloField::get(lcm);
}

void Cyclo::lift_inplace(const CycloField& target) {
    if (&target != F_) *this = lifted(target);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (F_ == o.F_) {
        for (int i = 0; i < F_->degree(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    const CycloField* F = common_field(*this, o);
    lift_inplace(*F);
    Cyclo tmp = o.lifted(*F);
    for (int i = 0; i < F->degree(); ++i) c_[i] += tmp.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (F_ == o.F_) {
        for (int i = 0; i < F_->degree(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    const CycloField* F = common_field(*this, o);
    lift_inplace(*F);
    Cyclo tmp = o.lifted(*F);
    for (int i = 0; i < F->degree(); ++i) c_[i] -= tmp.c_[i];
    return *this;
}

void Cyclo::mul_same_field(std::vector<mpq_class>& out, const Cyclo& a, const Cyclo& b) {
    const CycloField& F = *a.F_;
    int deg = F.degree();
    out.assign(deg, mpq_class(0));
    if (deg == 1) {
        out[0] = a.c_[0] * b.c_[0];
        return;
    }
    thread_local std::vector<mpq_class> conv;
    conv.assign(2 * deg - 1, mpq_class(0));
    for (int i = 0; i < deg; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < deg; ++j)
            if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
    }
    for (int i = 0; i < deg; ++i) out[i] = conv[i];
    for (int k = deg; k <= 2 * deg - 2; ++k) {
        if (conv[k] == 0) continue;
        const auto& p = F.power(k);
        for (int i = 0; i < deg; ++i) out[i] += conv[k] * p[i];
    }
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (F_ != o.F_) {
        const CycloField* F = common_field(*this, o);
        lift_inplace(*F);
        Cyclo tmp = o.lifted(*F);
        std::vector<mpq_class> out;
        mul_same_field(out, *this, tmp);
        c_ = std::move(out);
        return *this;
    }
    std::vector<mpq_class> out;
    mul_same_field(out, *this, o);
    c_ = std::move(out);
    return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
    if (o.is_rational()) {
        require(o.c_[0] != 0, ErrorKind::argument, "division by zero");
        for (auto& q : c_) q /= o.c_[0];
        return *this;
    }
    const CycloField* F = common_field(*this, o);
    lift_inplace(*F);
    return *this *= o.lifted(*F).inv();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.F_ == b.F_) return a.c_ == b.c_;
    const CycloField* F = Cyclo::common_field(a, b);
    return a.lifted(*F).c_ == b.lifted(*F).c_;
}

void Cyclo::addmul(Cyclo& acc, const Cyclo& a, const Cyclo& b) {
    if (a.F_ == b.F_ && acc.F_ == a.F_) {
        const CycloField& F = *a.F_;
        int deg = F.degree();
        if (deg == 1) {
            acc.c_[0] += a.c_[0] * b.c_[0];
            return;
        }
        if (deg == 2 && F.conductor() == 4) { // Q(i): (x+iy)(u+iv)
            acc.c_[0] += a.c_[0] * b.c_[0] - a.c_[1] * b.c_[1];
            acc.c_[1] += a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0];
            return;
        }
        thread_local std::vector<mpq_class> out;
        mul_same_field(out, a, b);
        for (int i = 0; i < deg; ++i) acc.c_[i] += out[i];
        return;
    }
    acc += a * b;
}

std::string Cyclo::str() const {
    int n = F_->conductor();
    if (n == 4) {
        std::ostringstream os;
        os << c_[0].get_str();
        if (c_[1] != 0) os << (sgn(c_[1]) < 0 ? "" : "+") << c_[1].get_str() << "i";
        return os.str();
    }
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < F_->degree(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << c_[k].get_str();
        if (k > 0) os << "*z" << n << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

double Cyclo::to_double_re() const {
    int n = F_->conductor();
    double acc = 0;
    for (int k = 0; k < F_->degree(); ++k)
        acc += c_[k].get_d() * std::cos(2.0 * M_PI * k / n);
    return acc;
}

double Cyclo::to_double_im() const {
    int n = F_->conductor();
    double acc = 0;
    for (int k = 0; k < F_->degree(); ++k)
        acc += c_[k].get_d() * std::sin(2.0 * M_PI * k / n);
    return acc;
}

} // namespace bishop
