#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/cyclotomic.hpp"
#include "core/numeric_scalar.hpp"

using namespace bishop;

TEST_CASE("rational embedding and basic arithmetic") {
    Cyclo a(mpq_class(3, 4)), b(mpq_class(-1, 6));
    CHECK((a + b).is_rational());
    CHECK((a + b).rational_value() == mpq_class(7, 12));
    CHECK((a * b).rational_value() == mpq_class(-1, 8));
    CHECK((a - a).is_zero());
    CHECK((a / a).is_one());
    CHECK(a.conj() == a);
}

TEST_CASE("roots of unity satisfy their defining relations") {
    CHECK((Cyclo::zeta(4) * Cyclo::zeta(4)).rational_value() == mpq_class(-1));
    // primitive cube roots sum to -1
    CHECK((Cyclo::root_of_unity(3, 1) + Cyclo::root_of_unity(3, 2)).rational_value() ==
          mpq_class(-1));
    // exponent addition law within one conductor
    for (int n : {3, 4, 5, 8, 12})
        for (long k = 0; k < n; ++k)
            CHECK(Cyclo::root_of_unity(n, k) * Cyclo::root_of_unity(n, n - k) == Cyclo(1));
    // full vanishing sum over all n-th roots
    Cyclo sum(0);
    for (long k = 0; k < 12; ++k) sum = sum + Cyclo::root_of_unity(12, k);
    CHECK(sum.is_zero());
}

TEST_CASE("cross-conductor promotion into the compositum") {
    Cyclo z3 = Cyclo::zeta(3), z4 = Cyclo::zeta(4);
    Cyclo p = z3 * z4; // a primitive 12th root
    Cyclo q(1);
    for (int i = 0; i < 12; ++i) q = q * p;
    CHECK(q.is_one());
    Cyclo pp(1);
    bool earlier_one = false;
    for (int i = 1; i < 12; ++i) {
        pp = pp * p;
        if (pp.is_one()) earlier_one = true;
    }
    CHECK(!earlier_one);
    // mixed-conductor sums behave linearly
    CHECK((z3 + z4) - z4 == z3);
}

TEST_CASE("conjugation and real part") {
    Cyclo g = Cyclo::gaussian(mpq_class(2, 3), mpq_class(-5, 7));
    CHECK(g.conj().conj() == g);
    CHECK(g.real_part().rational_value() == mpq_class(2, 3));
    CHECK((g * g.conj()).is_rational()); // |g|^2 in Q
    Cyclo z5 = Cyclo::zeta(5);
    CHECK(z5.conj() == Cyclo::root_of_unity(5, 4));
    CHECK((z5 + z5.conj()).conj() == z5 + z5.conj());
}

TEST_CASE("gaussian constructor matches i = zeta_4") {
    Cyclo g = Cyclo::gaussian(mpq_class(0), mpq_class(1));
    CHECK(g == Cyclo::zeta(4));
    CHECK(Cyclo::gaussian(mpq_class(1, 2), mpq_class(3)) ==
          Cyclo(mpq_class(1, 2)) + Cyclo(3) * Cyclo::zeta(4));
}

TEST_CASE("numeric scalar mirrors the exact field within tolerance") {
    NumScalar i = NumScalar::root_of_unity(4, 1);
    CHECK((i * i + NumScalar(1)).is_zero());
    NumScalar z = NumScalar::root_of_unity(8, 1);
    CHECK(z * z == NumScalar::root_of_unity(4, 1));
    NumScalar sum(0);
    for (long k = 0; k < 7; ++k) sum += NumScalar::root_of_unity(7, k);
    CHECK(sum.is_zero());
    NumScalar g(NumReal("0.25"), NumReal("-1.5"));
    CHECK((g * g.inv()).is_one());
    CHECK(g.conj().conj() == g);
    CHECK(g.real_part() == NumScalar(NumReal("0.25"), NumReal(0)));
}
