#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "bolsuper/bolsuper.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    bs_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("parse, check, serialize") {
    bs_algebra* a = nullptr;
    REQUIRE(bs_catalog_get("L2_3_1_bol", &a) == BS_OK);
    int passed = 0;
    size_t witnesses = 99;
    CHECK(bs_check(a, "bol", &passed, &witnesses) == BS_OK);
    CHECK(passed == 1);
    CHECK(witnesses == 0);
    size_t even = 0, odd = 0;
    CHECK(bs_algebra_dims(a, &even, &odd) == BS_OK);
    CHECK(even == 3);
    CHECK(odd == 1);

    char* text = nullptr;
    REQUIRE(bs_algebra_serialize(a, &text) == BS_OK);
    bs_algebra* b = nullptr;
    REQUIRE(bs_algebra_parse(text, &b) == BS_OK);
    bs_string_free(text);
    CHECK(bs_algebra_equal(a, b) == 1);

    char* name = nullptr;
    CHECK(bs_algebra_name(a, &name) == BS_OK);
    CHECK(take(name) == "L2(3,1)");
    size_t c = 9;
    CHECK(bs_center_dim(a, &c) == BS_OK);
    CHECK(c == 0);
    bs_algebra_free(a);
    bs_algebra_free(b);
}

TEST_CASE("error codes and messages") {
    bs_algebra* a = nullptr;
    CHECK(bs_algebra_parse("even e1\nbinary [e1,e2] = e1\n", &a) == BS_ERR_PARSE);
    CHECK(a == nullptr);
    CHECK(std::string(bs_last_error()).find("line 2") != std::string::npos);
    CHECK(bs_catalog_get("nope", &a) == BS_ERR_USAGE);
    CHECK(bs_algebra_parse(nullptr, &a) == BS_ERR_ARGUMENT);
    CHECK(bs_algebra_load("/nonexistent/file.alg", &a) == BS_ERR_USAGE);

    REQUIRE(bs_catalog_get("L2_2_2_malcev", &a) == BS_OK);
    bs_form* f = nullptr;
    CHECK(bs_killing(a, &f) == BS_ERR_PRECONDITION);
    CHECK(bs_killing_ricci(a, BS_RICCI_DIRECT, &f) == BS_ERR_MISMATCH);
    int passed = 1;
    CHECK(bs_check(a, "jordan", &passed, nullptr) == BS_ERR_USAGE);
    bs_algebra* lts = nullptr;
    CHECK(bs_lie_to_lts(a, &lts) == BS_ERR_PRECONDITION);
    bs_algebra_free(a);
}

TEST_CASE("derived algebras, envelopes and forms") {
    bs_algebra* m = nullptr;
    REQUIRE(bs_catalog_get("L2_2_2_malcev", &m) == BS_OK);
    bs_algebra* bol = nullptr;
    REQUIRE(bs_malcev_to_bol(m, &bol) == BS_OK);
    bs_algebra* cat = nullptr;
    REQUIRE(bs_catalog_get("L2_2_2_bol", &cat) == BS_OK);
    CHECK(bs_algebra_equal(bol, cat) == 1);

    bs_algebra* env = nullptr;
    REQUIRE(bs_enveloping(bol, 0, &env) == BS_OK);
    int passed = 0;
    CHECK(bs_check(env, "lie", &passed, nullptr) == BS_OK);
    CHECK(passed == 1);

    bs_form *direct = nullptr, *restriction = nullptr;
    REQUIRE(bs_killing_ricci(bol, BS_RICCI_DIRECT, &direct) == BS_OK);
    REQUIRE(bs_killing_ricci(bol, BS_RICCI_RESTRICTION, &restriction) == BS_OK);
    CHECK(bs_form_equal(direct, restriction) == 1);
    CHECK(bs_form_dim(direct) == 4);
    char* entry = nullptr;
    CHECK(bs_form_entry(direct, 0, 4, &entry) == BS_ERR_ARGUMENT);
    REQUIRE(bs_form_entry(direct, 0, 0, &entry) == BS_OK);
    CHECK_FALSE(take(entry).empty());
    int nondeg = -1;
    CHECK(bs_form_nondegenerate(direct, &nondeg) == BS_OK);
    CHECK((nondeg == 0 || nondeg == 1));

    bs_form* k = nullptr;
    REQUIRE(bs_killing(env, &k) == BS_OK);
    CHECK(bs_form_dim(k) == 8);

    bs_form_free(direct);
    bs_form_free(restriction);
    bs_form_free(k);
    bs_algebra_free(env);
    bs_algebra_free(cat);
    bs_algebra_free(bol);
    bs_algebra_free(m);
}

TEST_CASE("run_command through the C boundary") {
    const char* argv[] = {"check", "L2_2_2_malcev", "--kind", "lie"};
    int code = -1;
    char *out = nullptr, *err = nullptr;
    REQUIRE(bs_run_command(4, argv, &code, &out, &err) == BS_OK);
    CHECK(code == 1);
    CHECK(take(out).rfind("FAIL", 0) == 0);
    CHECK(take(err).empty());
    CHECK(bs_run_command(1, nullptr, &code, &out, &err) == BS_ERR_ARGUMENT);
}
