#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/error.hpp"
#include "core/surface_io.hpp"

using namespace bishop;

TEST_CASE("parse accepts the documented format") {
    std::string text =
        "# perturbed cubic model\n"
        "degree 6\n"
        "1 1 1 0\n"
        "3 0 1 0\n"
        "\n"
        "4 1 2/3 -5/7\n";
    auto H = parse_surface(text);
    CHECK(H.degree() == 6);
    CHECK(H.at(1, 1) == Cyclo(1));
    CHECK(H.at(3, 0) == Cyclo(1));
    CHECK(H.at(0, 3) == Cyclo(1)); // conjugate implied
    CHECK(H.at(4, 1) == Cyclo::gaussian(mpq_class(2, 3), mpq_class(-5, 7)));
    CHECK(H.at(1, 4) == H.at(4, 1).conj());
    CHECK(H.is_hermitian());
    CHECK(H.is_admissible());
}

TEST_CASE("serialize/parse round trip is the identity") {
    std::string text = generate_random(99, 4, 12, 9);
    auto H = parse_surface(text);
    auto again = parse_surface(serialize_surface(H));
    CHECK(again == H);
    CHECK(serialize_surface(again) == serialize_surface(H));
}

TEST_CASE("generator is deterministic and produces admissible surfaces") {
    CHECK(generate_random(7, 3, 10, 9) == generate_random(7, 3, 10, 9));
    CHECK(generate_random(7, 3, 10, 9) != generate_random(8, 3, 10, 9));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto H = parse_surface(generate_random(seed, 5, 11, 9));
        CHECK(H.degree() == 11);
        CHECK(H.is_hermitian());
        CHECK(H.is_admissible());
        CHECK(H.at(5, 0) == Cyclo(1));
    }
}

TEST_CASE("parse errors carry the parse error kind") {
    auto expect_kind = [](const std::string& text, ErrorKind kind) {
        try {
            parse_surface(text);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == kind);
        }
    };
    expect_kind("", ErrorKind::parse);                                // missing header
    expect_kind("degree x\n1 1 1 0\n", ErrorKind::parse);             // bad degree
    expect_kind("degree 4\n1 1 1 0\n9 0 1 0\n", ErrorKind::parse);    // exponent beyond degree
    expect_kind("degree 4\n1 1 1 0\n1 3 1 0\n", ErrorKind::parse);    // alpha < beta listed
    expect_kind("degree 4\n1 1 1 1\n", ErrorKind::parse);             // diagonal must be real
    expect_kind("degree 4\n1 1 1 0\n3 0 1/0 0\n", ErrorKind::parse);  // zero denominator
    expect_kind("degree 4\n1 1 1 0\n3 0 one 0\n", ErrorKind::parse);  // non-numeric
    expect_kind("degree 4\n1 1 1 0\n2 0 4\n", ErrorKind::parse);      // wrong arity
}

TEST_CASE("admissibility diagnostics are distinguished from parse errors") {
    auto expect_kind = [](const std::string& text, ErrorKind kind) {
        try {
            parse_surface(text);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == kind);
        }
    };
    // nonzero Bishop invariant
    expect_kind("degree 4\n1 1 1 0\n2 0 1 0\n", ErrorKind::admissibility);
    // not a complex-tangent graph (linear term)
    expect_kind("degree 4\n1 1 1 0\n1 0 1 0\n", ErrorKind::admissibility);
    // missing quadric term
    expect_kind("degree 4\n3 0 1 0\n", ErrorKind::admissibility);
}
