#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/branch.hpp"
#include "core/error.hpp"
#include "helpers.hpp"

using namespace bishop;
using namespace bishop::testutil;

namespace {

SurfaceSeries<Cyclo> model(int s, int D) {
    auto H = SurfaceSeries<Cyclo>::quadric(D);
    H.at(s, 0) = Cyclo(1);
    H.at(0, s) = Cyclo(1);
    return H;
}

// residual of the defining equation z + s zeta^{s-1} + E_zeta(z, zeta) = 0
// recomputed here, not inside branch_curve
OneVarSeries<Cyclo> curve_residual(const ComplexifiedSurface<Cyclo>& C,
                                   const OneVarSeries<Cyclo>& h1, int order) {
    OneVarSeries<Cyclo> res = h1 + eval_on_curve(C.E.dzbar(), h1, order);
    res.at(C.s - 1) += Cyclo(C.s);
    return res;
}

} // namespace

TEST_CASE("model branch curve in closed form (s = 3)") {
    auto C = complexify(model(3, 20));
    auto [h1, h2] = branch_curve(C, 20);
    // E = 0: h1 = -3 zeta^2 exactly, h2 = h1 zeta + h1^3 + zeta^3
    for (int k = 0; k <= 20; ++k) CHECK(h1.at(k) == (k == 2 ? Cyclo(-3) : Cyclo(0)));
    CHECK(h2.at(3) == Cyclo(-2));
    CHECK(h2.at(6) == Cyclo(-27));
    for (int k = 0; k <= 20; ++k)
        if (k != 3 && k != 6) CHECK(h2.at(k).is_zero());
    CHECK(curve_residual(C, h1, 20).is_zero());
}

TEST_CASE("perturbed surfaces: defining equations hold to high order") {
    for (int rep = 0; rep < 3; ++rep) {
        int s = 3 + rep % 2;
        auto H = random_surface(7100 + rep, s, 12, 6);
        SurfaceSeries<Cyclo> Hp(22);
        for (int al = 0; al <= 12; ++al)
            for (int be = 0; al + be <= 12; ++be) Hp.at(al, be) = H.at(al, be);
        auto C = complexify(Hp);
        auto [h1, h2] = branch_curve(C, 20);
        CHECK(curve_residual(C, h1, 20).is_zero());
        // w-component: h2 = h1 zeta + h1^s + zeta^s + E(h1, zeta), recomputed
        OneVarSeries<Cyclo> rhs = eval_on_curve(C.E, h1, 20) + h1.shifted(1).truncated(20);
        OneVarSeries<Cyclo> pw = h1;
        for (int i = 1; i < s; ++i) pw = pw * h1;
        rhs = rhs + pw.truncated(20);
        rhs.at(s) += Cyclo(1);
        CHECK(rhs == h2.truncated(20));
        CHECK(h2.at(s) == Cyclo(1 - s));
    }
}

TEST_CASE("branch points: leading data and membership order") {
    for (int s : {3, 4}) {
        auto H = random_surface(555 + s, s, 10, 5);
        SurfaceSeries<Cyclo> Hp(20);
        for (int al = 0; al <= 10; ++al)
            for (int be = 0; al + be <= 10; ++be) Hp.at(al, be) = H.at(al, be);
        auto C = complexify(Hp);
        auto brs = branch_points(C, 18);
        CHECK(static_cast<int>(brs.size()) == s);
        for (const auto& br : brs) {
            CHECK(br.P.at(s - 1) == Cyclo(-s));
            for (int k = 0; k < s - 1; ++k) CHECK(br.P.at(k).is_zero());
            auto mo = membership_order(C, br);
            CHECK(mo.first * s == 2 * (s - 1) * mo.second);
        }
    }
}

TEST_CASE("leading hyperbolic constants match independent evaluation") {
    for (int s : {3, 4, 5, 7}) {
        for (int j = 1; j < s; ++j) {
            auto lc = leading_hyperbolic_constant(s, j);
            CHECK(lc.rational == mpq_class(s));
            CHECK(lc.radical_exponent == mpq_class(1 - s, s));
            mpq_class uexp(s - 2, 2 * s);
            uexp.canonicalize();
            CHECK(lc.u_exponent == uexp);
            // independent: |zeta_{2s} - zeta_{2s}^{1+2j}| via NumScalar
            NumScalar d = NumScalar::root_of_unity(2 * s, 1) - NumScalar::root_of_unity(2 * s, 1 + 2 * j);
            NumReal mod = sqrt(d.abs2());
            NumReal v = NumReal(s) * pow(NumReal(s - 1), NumReal(1 - s) / NumReal(s)) * mod;
            double expect = v.convert_to<double>();
            CHECK(std::abs(lc.value - expect) < 1e-12);
        }
    }
    // spot value: s = 3, j = 1 gives 3 * 2^(-2/3) * sqrt(3)
    auto lc = leading_hyperbolic_constant(3, 1);
    CHECK(std::abs(lc.value - 3.0 * std::pow(2.0, -2.0 / 3.0) * std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("contract violations") {
    auto bad = SurfaceSeries<Cyclo>::quadric(10); // no pure-z term
    CHECK_THROWS_AS(complexify(bad), Error);
    auto scaled = SurfaceSeries<Cyclo>::quadric(10);
    scaled.at(3, 0) = Cyclo(2);
    scaled.at(0, 3) = Cyclo(2);
    CHECK_THROWS_AS(complexify(scaled), Error); // leading coefficient must be 1
    auto C = complexify(model(3, 10));
    CHECK_THROWS_AS(branch_curve(C, 2), Error);  // order below s
    CHECK_THROWS_AS(branch_curve(C, 15), Error); // truncation insufficient
}
