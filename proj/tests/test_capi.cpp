#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>

#include <json.hpp>

#include "veronese_lab.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    vl_string_free(s);
    return out;
}

} // namespace

TEST_CASE("gb round trip through the text format") {
    const char* text =
        "# twisted cubic\n"
        "ring x0..x3 over F(32003)\n"
        "x0*x2-x1^2\n"
        "x1*x3-x2^2\n"
        "x0*x3-x1*x2\n";
    vl_ideal* I = nullptr;
    REQUIRE(vl_ideal_parse(text, &I) == VL_OK);
    char* basis = nullptr;
    REQUIRE(vl_ideal_groebner(I, "grevlex", &basis) == VL_OK);
    std::string out = take(basis);
    CHECK(out.rfind("ring x0,x1,x2,x3 over F(32003)\n", 0) == 0);
    // three quadrics, already reduced
    CHECK(std::count(out.begin(), out.end(), '\n') == 4);
    int dim = -2, deg = 0;
    CHECK(vl_ideal_dimension(I, &dim) == VL_OK);
    CHECK(dim == 1);
    // reparse the printed basis
    vl_ideal* J = nullptr;
    REQUIRE(vl_ideal_parse(out.c_str(), &J) == VL_OK);
    char* basis2 = nullptr;
    REQUIRE(vl_ideal_groebner(J, "grevlex", &basis2) == VL_OK);
    CHECK(take(basis2) == out);
    vl_ideal_free(J);
    vl_ideal_free(I);
    (void)deg;
}

TEST_CASE("gb over QQ and with a block order") {
    const char* text =
        "ring x,y,z over QQ\n"
        "x^2-y\n"
        "x^3-z\n";
    vl_ideal* I = nullptr;
    REQUIRE(vl_ideal_parse(text, &I) == VL_OK);
    char* basis = nullptr;
    REQUIRE(vl_ideal_groebner(I, "block:1", &basis) == VL_OK);
    std::string out = take(basis);
    CHECK(out.find("y^3") != std::string::npos); // the eliminant y^3 - z^2 shows up
    vl_ideal_free(I);
}

TEST_CASE("parse errors set a message and return VL_ERR_PARSE") {
    vl_ideal* I = nullptr;
    CHECK(vl_ideal_parse("no header here\n", &I) == VL_ERR_PARSE);
    CHECK(std::strlen(vl_last_error()) > 0);
    CHECK(vl_ideal_parse("ring x0..x2 over F(6)\nx0\n", &I) != VL_OK);
}

TEST_CASE("chow evaluation and listing") {
    long long v = 0;
    REQUIRE(vl_chow_eval("GR13", "(3a+b)*(3a+b)", &v) == VL_OK);
    CHECK(v == 10);
    REQUIRE(vl_chow_eval("GR13", "(3a+b)*(a+3b)", &v) == VL_OK);
    CHECK(v == 6);
    CHECK(vl_chow_eval("GR13", "(((", &v) == VL_ERR_PARSE);
    CHECK(vl_chow_eval("NOPE", "a^2", &v) != VL_OK);
    char* listing = nullptr;
    REQUIRE(vl_chow_list(&listing) == VL_OK);
    std::string s = take(listing);
    for (const char* name : {"GR13", "RANK5", "CONE3", "RANK4", "RANK3"})
        CHECK(s.find(name) != std::string::npos);
}

TEST_CASE("scenario ids and a full S11 run through the C API") {
    char* ids = nullptr;
    REQUIRE(vl_scenario_ids(&ids) == VL_OK);
    std::string s = take(ids);
    CHECK(std::count(s.begin(), s.end(), '\n') == 11);

    char* json = nullptr;
    int pass = -1;
    REQUIRE(vl_run_scenario("S11", 0, 0, 0, 0, 0, 0, /*include_timings=*/0, &json, &pass) == VL_OK);
    CHECK(pass == 1);
    auto rep = nlohmann::json::parse(take(json));
    CHECK(rep["scenario"] == "S11");
    CHECK(rep["pass"] == true);
    CHECK(rep["timings_ms"].empty());

    CHECK(vl_run_scenario("S99", 0, 0, 0, 0, 0, 0, 1, &json, &pass) == VL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("a fast geometric scenario through the C API") {
    char* json = nullptr;
    int pass = -1;
    REQUIRE(vl_run_scenario("S2", 0, 0, 0, 0, 0, 0, 1, &json, &pass) == VL_OK);
    CHECK(pass == 1);
    auto rep = nlohmann::json::parse(take(json));
    CHECK(rep["field"] == "F(32003)");
    bool found = false;
    for (const auto& c : rep["checks"])
        if (c["name"] == "length") {
            found = true;
            CHECK(c["actual"] == 6);
        }
    CHECK(found);
}
