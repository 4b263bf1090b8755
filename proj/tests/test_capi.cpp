#include <doctest.h>

#include <json.hpp>
#include <string>

#include "lie2/lie2.h"

using nlohmann::json;

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s) {
    std::string out = s ? s : "";
    lie2_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("capi: fields") {
    lie2_field* f = nullptr;
    REQUIRE(lie2_field_new("gf4", &f) == LIE2_OK);
    uint32_t r = 0;
    CHECK(lie2_field_mul(f, 2, 2, &r) == LIE2_OK);
    CHECK(r == 3);  // t^2 = t + 1
    CHECK(lie2_field_inv(f, 2, &r) == LIE2_OK);
    CHECK(r == 3);
    CHECK(lie2_field_inv(f, 0, &r) == LIE2_ERR_DOMAIN);
    CHECK(std::string(lie2_last_error()).size() > 0);
    CHECK(lie2_field_mul(f, 4, 1, &r) == LIE2_ERR_USAGE);
    char* s = nullptr;
    CHECK(lie2_field_format(f, 3, &s) == LIE2_OK);
    CHECK(take(s) == "t+1");
    lie2_field_free(f);
    CHECK(lie2_field_new("gf6", &f) == LIE2_ERR_USAGE);
    CHECK(lie2_field_new(nullptr, &f) == LIE2_ERR_USAGE);
}

TEST_CASE("capi: algebras") {
    lie2_algebra* g = nullptr;
    REQUIRE(lie2_algebra_classical("gf2", "sl", 3, -1, -1, &g) == LIE2_OK);
    CHECK(lie2_algebra_dim(g) == 8);
    int ok = 0;
    CHECK(lie2_algebra_validate(g, &ok, nullptr) == LIE2_OK);
    CHECK(ok == 1);
    char* text = nullptr;
    REQUIRE(lie2_algebra_to_json(g, &text) == LIE2_OK);
    std::string doc = take(text);
    lie2_algebra* h = nullptr;
    REQUIRE(lie2_algebra_from_json(doc.c_str(), &h) == LIE2_OK);
    CHECK(lie2_algebra_dim(h) == 8);
    lie2_algebra_free(h);
    lie2_algebra_free(g);

    REQUIRE(lie2_algebra_vect("gf2", 2, 1, &g) == LIE2_OK);
    uint32_t x[3] = {1, 0, 0}, y[3] = {0, 0, 1}, z[3] = {9, 9, 9};
    CHECK(lie2_algebra_bracket(g, x, y, z) == LIE2_OK);
    CHECK((z[0] == 0 && z[1] == 1 && z[2] == 0));  // [d, x^(2) d] = x d
    size_t der = 0;
    CHECK(lie2_algebra_derivation_dim(g, &der) == LIE2_OK);
    CHECK(der == 5);

    // U(1,1) on vect^(1)(1;2).
    const uint32_t U[9] = {0, 1, 1, 1, 0, 1, 1, 1, 0};
    lie2_super* s = nullptr;
    REQUIRE(lie2_super_superize(g, U, &s) == LIE2_OK);
    CHECK(lie2_super_dim_even(s) + lie2_super_dim_odd(s) >= 3);
    CHECK(lie2_super_validate(s, &ok, nullptr) == LIE2_OK);
    CHECK(ok == 1);
    lie2_super_free(s);
    const uint32_t notU[9] = {1, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK(lie2_super_superize(g, notU, &s) == LIE2_ERR_USAGE);
    lie2_algebra_free(g);
    CHECK(lie2_algebra_from_json("{\"field\": \"gf2\"}", &g) == LIE2_ERR_USAGE);
}

TEST_CASE("capi: superalgebras") {
    lie2_super *a = nullptr, *b = nullptr;
    REQUIRE(lie2_super_known("gf2", "kl", 4, 0, &a) == LIE2_OK);
    CHECK(lie2_super_dim_even(a) == 9);
    CHECK(lie2_super_dim_odd(a) == 8);
    char* text = nullptr;
    REQUIRE(lie2_super_to_json(a, &text) == LIE2_OK);
    std::string doc = take(text);
    REQUIRE(lie2_super_from_json(doc.c_str(), &b) == LIE2_OK);
    CHECK(lie2_super_equal(a, b) == 1);
    char* fp = nullptr;
    CHECK(lie2_super_fingerprint(a, &fp) == LIE2_OK);
    CHECK(take(fp).size() > 0);
    lie2_super_free(b);
    REQUIRE(lie2_super_known("gf2", "q-vect", 4, 0, &b) == LIE2_OK);
    CHECK(lie2_super_equal(a, b) == 0);
    lie2_super_free(b);
    REQUIRE(lie2_super_vect("gf2", 3, "000", &b) == LIE2_OK);
    CHECK(lie2_super_dim_even(b) == 5);
    CHECK(lie2_super_dim_odd(b) == 4);
    lie2_super_free(b);
    lie2_super_free(a);
    CHECK(lie2_super_known("gf2", "kl-printed", 4, 0, &a) == LIE2_OK);
    int ok = 1;
    CHECK(lie2_super_validate(a, &ok, nullptr) == LIE2_OK);
    CHECK(ok == 0);
    lie2_super_free(a);
}

TEST_CASE("capi: document runners") {
    char* doc = nullptr;
    REQUIRE(lie2_run_tables(3, LIE2_GOLDEN_DIR, &doc) == LIE2_OK);
    json t = json::parse(take(doc));
    CHECK(t["golden_match"] == true);
    CHECK(t["csv"].get<std::string>().rfind("n,tag,", 0) == 0);

    REQUIRE(lie2_run_sierpinski(3, LIE2_GOLDEN_DIR, &doc) == LIE2_OK);
    CHECK(json::parse(take(doc))["ok"] == true);

    REQUIRE(lie2_run_vect("gf2", 4, "0,1,0,1", "charpoly", &doc) == LIE2_OK);
    CHECK(json::parse(take(doc))["ok"] == true);
    CHECK(lie2_run_vect("gf2", 4, "1,1,0,1", "charpoly", &doc) == LIE2_ERR_USAGE);
    CHECK(lie2_run_vect("gf2", 4, "0,1,0,1", "bogus", &doc) == LIE2_ERR_USAGE);

    REQUIRE(lie2_run_known("gf2", "kl-printed", 4, 0, &doc) == LIE2_ERR_MISMATCH);
    json k = json::parse(take(doc));
    CHECK(k["ok"] == false);
    CHECK(k["equals_vect_superization"] == false);

    REQUIRE(lie2_run_gradings("gf2", "sl", 4, 0, 0, &doc) == LIE2_OK);
    json g = json::parse(take(doc));
    CHECK(g["reps"].size() == 3);

    lie2_algebra* v = nullptr;
    REQUIRE(lie2_algebra_vect("gf2", 2, 1, &v) == LIE2_OK);
    char* vj = nullptr;
    REQUIRE(lie2_algebra_to_json(v, &vj) == LIE2_OK);
    json grading{{"algebra", json::parse(take(vj))}, {"U", {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}}};
    lie2_algebra_free(v);
    REQUIRE(lie2_run_superize(grading.dump().c_str(), &doc) == LIE2_OK);
    json s = json::parse(take(doc));
    CHECK(s["validation"]["ok"] == true);
    CHECK(lie2_run_superize("{\"U\": []}", &doc) == LIE2_ERR_USAGE);
}
