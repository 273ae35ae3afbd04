#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include <bishop.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { bishop_string_free(p); }
    std::string s() const { return p ? std::string(p) : std::string(); }
};

struct Surf {
    bishop_surface* p = nullptr;
    ~Surf() { bishop_surface_free(p); }
};

int parse(const std::string& text, Surf& s) { return bishop_surface_parse(text.c_str(), &s.p); }

} // namespace

TEST_CASE("parse/serialize round trip through the C boundary") {
    Str text;
    REQUIRE(bishop_generate_random(12, 3, 10, 9, &text.p) == 0);
    Surf s;
    REQUIRE(parse(text.s(), s) == 0);
    CHECK(bishop_surface_degree(s.p) == 10);
    Str out;
    REQUIRE(bishop_surface_serialize(s.p, &out.p) == 0);
    Surf s2;
    REQUIRE(parse(out.s(), s2) == 0);
    Str out2;
    REQUIRE(bishop_surface_serialize(s2.p, &out2.p) == 0);
    CHECK(out.s() == out2.s());
}

TEST_CASE("error codes match the documented categories") {
    Surf s;
    CHECK(parse("nonsense", s) == 2);
    CHECK(std::string(bishop_last_error()).find("degree") != std::string::npos);
    CHECK(parse("degree 4\n1 1 1 0\n2 0 1 0\n", s) == 3);
    CHECK(bishop_surface_parse(nullptr, &s.p) == 6);
    CHECK(bishop_surface_read("/no/such/file", &s.p) == 2);
    REQUIRE(parse("degree 5\n1 1 1 0\n3 0 1 0\n", s) == 0);
    Str rep;
    CHECK(bishop_normalize(s.p, 9, 0, &rep.p) == 4);  // beyond truncation
    CHECK(bishop_normalize(s.p, 2, 0, &rep.p) == 6);  // degree < 3
    CHECK(bishop_branch(s.p, 2, &rep.p) == 6);        // order < 3
    // quadric to truncation: nothing to normalize
    Surf quad;
    REQUIRE(parse("degree 5\n1 1 1 0\n", quad) == 0);
    CHECK(bishop_normalize(quad.p, -1, 0, &rep.p) == 3);
}

TEST_CASE("normalize report carries verified exact data") {
    Str text;
    REQUIRE(bishop_generate_random(3, 3, 9, 9, &text.p) == 0);
    Surf s;
    REQUIRE(parse(text.s(), s) == 0);
    Str rep;
    REQUIRE(bishop_normalize(s.p, -1, 0, &rep.p) == 0);
    json r = json::parse(rep.s());
    CHECK(r["operation"] == "normalize");
    CHECK(r["s"] == 3);
    CHECK(r["numeric"] == false);
    CHECK(r["residual_checked"] == true);
    CHECK(r["lambda"].is_array());
    CHECK(r["lambda"].size() == 2); // degrees 5 and 8
    CHECK(r["lambda"][0]["degree"] == 5);
    CHECK(r["aut"]["s"] == 3);

    // verify round trip, then tamper
    Str v;
    CHECK(bishop_verify(s.p, rep.s().c_str(), &v.p) == 0);
    CHECK(json::parse(v.s())["residual_zero"] == true);
    json bad = r;
    bad["surface_out"]["terms"][0]["value"] = "7/2";
    Str v2;
    CHECK(bishop_verify(s.p, bad.dump().c_str(), &v2.p) == 5);
    Str v3;
    CHECK(bishop_verify(s.p, "{not json", &v3.p) == 2);
}

TEST_CASE("invariants, aut and equiv agree with normalize") {
    Str text;
    REQUIRE(bishop_generate_random(8, 4, 11, 9, &text.p) == 0);
    Surf s;
    REQUIRE(parse(text.s(), s) == 0);
    Str inv, aut, norm;
    REQUIRE(bishop_invariants(s.p, -1, &inv.p) == 0);
    REQUIRE(bishop_aut(s.p, -1, &aut.p) == 0);
    REQUIRE(bishop_normalize(s.p, -1, 0, &norm.p) == 0);
    json ji = json::parse(inv.s()), ja = json::parse(aut.s()), jn = json::parse(norm.s());
    CHECK(ji["s"] == 4);
    CHECK(ji["lambda"] == jn["lambda"]);
    CHECK(ja["aut"] == jn["aut"]);
    Str eq;
    REQUIRE(bishop_equiv(s.p, s.p, -1, &eq.p) == 0);
    json je = json::parse(eq.s());
    CHECK(je["equivalent"] == true);
    CHECK(je["l"] == 0);
    // quadric reports s = null from invariants
    Surf quad;
    REQUIRE(parse("degree 6\n1 1 1 0\n", quad) == 0);
    Str qi;
    REQUIRE(bishop_invariants(quad.p, -1, &qi.p) == 0);
    CHECK(json::parse(qi.s())["s"].is_null());
}

TEST_CASE("branch report") {
    Surf s;
    REQUIRE(parse("degree 20\n1 1 1 0\n3 0 1 0\n", s) == 0);
    Str rep;
    REQUIRE(bishop_branch(s.p, 20, &rep.p) == 0);
    json r = json::parse(rep.s());
    CHECK(r["s"] == 3);
    CHECK(r["branches"].size() == 3);
    for (const auto& br : r["branches"]) CHECK(br["membership_exponent"] == "4/3");
    CHECK(r["leading_constants"].size() == 2);
    double v = r["leading_constants"][0]["value"].get<double>();
    CHECK(std::abs(v - 3.0 * std::pow(2.0, -2.0 / 3.0) * std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("numeric rescale flag handles non-unit leading coefficients") {
    // w = z zbar + 8 z^5 + 8 zbar^5: rho = 8^{1/3} = 2 exactly
    Surf s;
    REQUIRE(parse("degree 7\n1 1 1 0\n5 0 8 0\n", s) == 0);
    Str rep;
    CHECK(bishop_normalize(s.p, -1, 0, &rep.p) == 3); // exact mode refuses
    Str repn;
    REQUIRE(bishop_normalize(s.p, -1, BISHOP_FLAG_NUMERIC_SCALE, &repn.p) == 0);
    json r = json::parse(repn.s());
    CHECK(r["numeric"] == true);
    CHECK(r["s"] == 5);
    CHECK(std::abs(std::stod(r["scale"]["rho"].get<std::string>()) - 2.0) < 1e-12);
    CHECK(std::abs(std::stod(r["scale"]["theta"].get<std::string>())) < 1e-12);
    // numeric reports cannot be re-verified exactly
    Str v;
    CHECK(bishop_verify(s.p, repn.s().c_str(), &v.p) == 6);
}
