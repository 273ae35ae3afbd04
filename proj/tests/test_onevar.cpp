#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/cyclotomic.hpp"
#include "core/error.hpp"
#include "core/onevar.hpp"
#include "helpers.hpp"

using namespace bishop;
using namespace bishop::testutil;

TEST_CASE("arithmetic and truncation basics") {
    auto t = OneVarSeries<Cyclo>::variable(8);
    auto p = t * t + t * Cyclo(3);
    CHECK(p.at(1) == Cyclo(3));
    CHECK(p.at(2) == Cyclo(1));
    CHECK(p.truncated(1).trunc() == 1);
    CHECK((p - p).is_zero());
    auto d = p.derivative();
    CHECK(d.at(0) == Cyclo(3));
    CHECK(d.at(1) == Cyclo(2));
    auto sh = t.shifted(3);
    CHECK(sh.at(4) == Cyclo(1));
    CHECK(sh.trunc() == 11);
}

TEST_CASE("product truncation keeps only reliable exponents") {
    auto t = OneVarSeries<Cyclo>::variable(5);
    auto q = (t + t * t) * (t - t * t);
    CHECK(q.at(2) == Cyclo(1));
    CHECK(q.at(3).is_zero());
    CHECK(q.at(4) == Cyclo(-1));
}

TEST_CASE("compose/revert round trips on random unit-slope series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        int T = 12;
        OneVarSeries<Cyclo> h(T);
        h.at(1) = Cyclo(1);
        for (int k = 2; k <= T; ++k)
            if (rng() % 2) h.at(k) = random_gaussian(rng, 5);
        auto hinv = revert(h);
        auto id1 = compose(h, hinv);
        auto id2 = compose(hinv, h);
        for (int k = 0; k <= T; ++k) {
            CHECK(id1.at(k) == (k == 1 ? Cyclo(1) : Cyclo(0)));
            CHECK(id2.at(k) == (k == 1 ? Cyclo(1) : Cyclo(0)));
        }
    }
}

TEST_CASE("composition is associative with random inner series") {
    std::mt19937_64 rng(21);
    int T = 10;
    OneVarSeries<Cyclo> a(T), b(T), c(T);
    for (int k = 0; k <= T; ++k) a.at(k) = random_gaussian(rng, 4);
    b.at(1) = Cyclo(mpq_class(2, 3));
    c.at(1) = Cyclo(-1);
    for (int k = 2; k <= T; ++k) {
        b.at(k) = random_gaussian(rng, 4);
        c.at(k) = random_gaussian(rng, 4);
    }
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("nth_root_unit inverts s-th powers") {
    std::mt19937_64 rng(5);
    for (int s : {2, 3, 5}) {
        int T = 15;
        OneVarSeries<Cyclo> h(T);
        h.at(1) = Cyclo(1);
        for (int k = 2; k <= T; ++k) h.at(k) = random_gaussian(rng, 4);
        OneVarSeries<Cyclo> pw = h;
        for (int i = 1; i < s; ++i) pw = pw * h;
        auto root = nth_root_unit(pw, s);
        CHECK(root.trunc() == T - s + 1); // reliable order shrinks by s - 1
        CHECK(root == h.truncated(root.trunc()));
    }
}

TEST_CASE("contract violations throw argument errors") {
    auto t = OneVarSeries<Cyclo>::variable(6);
    auto one = t;
    one.at(0) = Cyclo(1);
    CHECK_THROWS_AS(compose(t, one), Error);
    CHECK_THROWS_AS(revert(one), Error);
    OneVarSeries<Cyclo> flat(6);
    flat.at(2) = Cyclo(1);
    CHECK_THROWS_AS(revert(flat), Error);
    CHECK_THROWS_AS(nth_root_unit(flat, 3), Error);
}
