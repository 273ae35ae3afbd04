#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/invariants.hpp"
#include "core/normalizer.hpp"
#include "core/pushforward.hpp"
#include "helpers.hpp"

using namespace bishop;
using namespace bishop::testutil;

TEST_CASE("invariant table slots are the degrees not killed by resonance") {
    auto nf = NormalForm<Cyclo>::zero(3, 11);
    std::vector<int> degs;
    for (const auto& e : nf.table) degs.push_back(e.degree(3));
    CHECK(degs == std::vector<int>{5, 8, 11});
    auto nf4 = NormalForm<Cyclo>::zero(4, 12);
    degs.clear();
    for (const auto& e : nf4.table) degs.push_back(e.degree(4));
    CHECK(degs == std::vector<int>{6, 7, 10, 11});
}

TEST_CASE("detect_moser_s sees through non-harmonic low-order noise") {
    auto H = SurfaceSeries<Cyclo>::quadric(7);
    H.at(2, 1) = Cyclo::gaussian(1, 1);
    H.at(1, 2) = H.at(2, 1).conj();
    H.at(2, 2) = Cyclo(3);
    H.at(5, 0) = Cyclo(mpq_class(1, 2));
    H.at(0, 5) = Cyclo(mpq_class(1, 2));
    CHECK(*detect_moser_s(H, 7) == 5);
    CHECK(!detect_moser_s(SurfaceSeries<Cyclo>::quadric(7), 7).has_value());
    // s is invariant under shape-legal transforms
    std::mt19937_64 rng(9);
    auto Hr = random_surface(606, 4, 10, 5);
    auto t = random_hermitian_transform(rng, 4, 10, 4, 5);
    CHECK(*detect_moser_s(pushforward(Hr, t), 10) == 4);
}

TEST_CASE("rotation orbits and the equivalence decision") {
    auto nf = NormalForm<Cyclo>::zero(4, 11);
    nf.at_degree(6) = Cyclo::gaussian(mpq_class(1, 2), 3);
    nf.at_degree(7) = Cyclo(-2);
    nf.at_degree(10) = Cyclo::gaussian(0, mpq_class(5, 7));
    for (int l = 0; l < 4; ++l) {
        auto rot = rotate_normal_form(nf, l);
        auto found = equivalent(nf, rot);
        REQUIRE(found.has_value());
        CHECK(*found == ((4 - l) % 4));
        CHECK(equivalent(rot, nf).has_value());
    }
    // perturb one entry: inequivalent
    auto other = nf;
    other.at_degree(7) += Cyclo(1);
    CHECK(!equivalent(nf, other).has_value());
    // different s: inequivalent
    auto nf3 = NormalForm<Cyclo>::zero(3, 11);
    CHECK(!equivalent(nf, nf3).has_value());
}

TEST_CASE("equivalence returns the smallest rotation index") {
    // table supported only on j = 2 with s = 4: rotations l and l+2 agree
    auto nf = NormalForm<Cyclo>::zero(4, 10);
    nf.at_degree(6) = Cyclo(5);
    auto rot = rotate_normal_form(nf, 2); // zeta_4^{2*2} = 1, table unchanged
    auto found = equivalent(nf, rot);
    REQUIRE(found.has_value());
    CHECK(*found == 0);
}

TEST_CASE("automorphism group orders") {
    // all-zero table: full rotation group of order s
    for (int s : {3, 4, 5, 6}) CHECK(automorphism_group(NormalForm<Cyclo>::zero(s, 3 * s)).order() == s);
    // s = 4, only j = 2 occupied: index-2 subgroup survives
    auto nf = NormalForm<Cyclo>::zero(4, 10);
    nf.at_degree(6) = Cyclo(1);
    CHECK(automorphism_group(nf).order() == 2);
    // j = 3 as well: only the identity
    nf.at_degree(7) = Cyclo(1);
    CHECK(automorphism_group(nf).order() == 1);
    // s = 6, j ∈ {2, 4}: gcd structure gives order 2
    auto nf6 = NormalForm<Cyclo>::zero(6, 17);
    nf6.at_degree(8) = Cyclo(1);
    nf6.at_degree(10) = Cyclo(1);
    CHECK(automorphism_group(nf6).order() == 2);
}

TEST_CASE("rotated surfaces produce rotated invariant tables") {
    int s = 3, D = 11;
    auto H = random_surface(2024, s, D, 6);
    NormalForm<Cyclo> nf;
    normal_form(H, D, &nf, false);
    for (int l = 0; l < s; ++l) {
        // rotate the graph so the table picks up zeta_s^{jl}
        SurfaceSeries<Cyclo> Hr(D);
        for (int al = 0; al <= D; ++al)
            for (int be = 0; al + be <= D; ++be)
                Hr.at(al, be) =
                    H.at(al, be) * Cyclo::root_of_unity(s, static_cast<long>(l) * (al - be));
        NormalForm<Cyclo> nfr;
        normal_form(Hr, D, &nfr, false);
        for (const auto& e : nf.table) {
            auto er = nfr; // lookup by degree
            CHECK(er.at_degree(e.degree(s)) ==
                  Cyclo::root_of_unity(s, static_cast<long>(e.j) * l) * e.value);
        }
        CHECK(equivalent(nfr, nf).has_value());
    }
}
