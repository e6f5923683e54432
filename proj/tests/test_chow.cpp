#include <doctest.h>

#include "vlab/chow.hpp"

using namespace vlab;

TEST_SUITE_BEGIN("chow");

TEST_CASE("builtin tables are complete over their top-degree monomials") {
    auto names = ChowAmbient::builtin_names();
    CHECK(names.size() == 5);
    for (const auto& n : names) CHECK_NOTHROW(ChowAmbient::builtin(n).check_complete());
    CHECK_THROWS_AS((void)ChowAmbient::builtin("NOPE"), Error);
}

TEST_CASE("table lookups match the stated pairings") {
    const auto& gr = ChowAmbient::builtin("GR13");
    CHECK(chow_evaluate(gr, "a^2") == 1);
    CHECK(chow_evaluate(gr, "b^2") == 1);
    CHECK(chow_evaluate(gr, "a*b") == 0);
    const auto& r5 = ChowAmbient::builtin("RANK5");
    CHECK(chow_evaluate(r5, "H^4") == 2);
    CHECK(chow_evaluate(r5, "H^3*Hp") == 2);
    CHECK(chow_evaluate(r5, "Hp^4") == 0);
    const auto& c3 = ChowAmbient::builtin("CONE3");
    CHECK(chow_evaluate(c3, "H^3") == 3);
    CHECK(chow_evaluate(c3, "F1^2*H") == -1);
    CHECK(chow_evaluate(c3, "F1^3") == 0); // zero rule completion
    const auto& r4 = ChowAmbient::builtin("RANK4");
    CHECK(chow_evaluate(r4, "H^4") == 2);
    CHECK(chow_evaluate(r4, "F1*H^3") == 1);
    CHECK(chow_evaluate(r4, "F1^2*H^2") == 0);
    const auto& r3 = ChowAmbient::builtin("RANK3");
    CHECK(chow_evaluate(r3, "H^4") == 2);
    CHECK(chow_evaluate(r3, "H^3*F") == 1);
    CHECK(chow_evaluate(r3, "F^2*H^2") == 0);
}

TEST_CASE("CONE3 mixed product decomposes termwise: 4 = 3 + 2 - 1") {
    const auto& c3 = ChowAmbient::builtin("CONE3");
    long long manual = chow_evaluate(c3, "H^3") + 2 * chow_evaluate(c3, "F1*H^2") +
                       chow_evaluate(c3, "F1^2*H");
    CHECK(manual == 4);
    CHECK(chow_evaluate(c3, "(H+F1)^2*H") == manual);
}

TEST_CASE("product is commutative, associative, bilinear") {
    const auto& r4 = ChowAmbient::builtin("RANK4");
    ChowClass H = ChowClass::parse(r4, "H");
    ChowClass F1 = ChowClass::parse(r4, "F1");
    ChowClass F2 = ChowClass::parse(r4, "F2");
    CHECK(H * F1 == F1 * H);
    CHECK((H * F1) * F2 == H * (F1 * F2));
    CHECK((H + F1) * F2 == H * F2 + F1 * F2);
    CHECK((H - H).degree == -1); // zero class
    CHECK(H.scaled(3) == H + H + H);
    // intersect of permuted factor lists agrees
    CHECK(chow_intersect(r4, {H, H, F1, F2}) == chow_intersect(r4, {F2, H, F1, H}));
}

TEST_CASE("parser: implicit products, powers, signs, errors") {
    const auto& gr = ChowAmbient::builtin("GR13");
    CHECK(ChowClass::parse(gr, "3a+b") == ChowClass::parse(gr, "b + 3*a"));
    CHECK(ChowClass::parse(gr, "(a+b)^2") == ChowClass::parse(gr, "a^2+2a b+b^2"));
    CHECK(ChowClass::parse(gr, "-a") == ChowClass::parse(gr, "a").scaled(-1));
    CHECK_THROWS_AS((void)ChowClass::parse(gr, "a+"), Error);
    CHECK_THROWS_AS((void)ChowClass::parse(gr, "c"), Error);
    CHECK_THROWS_AS((void)chow_evaluate(gr, "a"), Error); // not top degree
}

TEST_CASE("solve_class covers all three statuses") {
    const auto& r5 = ChowAmbient::builtin("RANK5");
    ChowClass H = ChowClass::parse(r5, "H");
    ChowClass Hp = ChowClass::parse(r5, "Hp");
    // unique
    ChowAnsatz a{ChowClass::zero(r5), {H, Hp}};
    auto u = solve_class(r5, a, {{{ChowClass::parse(r5, "H^3")}, 0},
                                 {{ChowClass::parse(r5, "Hp^3")}, 2}});
    REQUIRE(u.status == SolveStatus::Unique);
    CHECK(u.coeffs == std::vector<long long>{1, -1});
    // no solution: H^3 pairs to 2 with both H and Hp, so 0 and 2 conflict
    auto n = solve_class(r5, a, {{{ChowClass::parse(r5, "H^3")}, 0},
                                 {{ChowClass::parse(r5, "H^2*Hp")}, 2},
                                 {{ChowClass::parse(r5, "H*Hp^2")}, 5}});
    CHECK(n.status == SolveStatus::NoSolution);
    // non-unique: single constraint on two unknowns with a kernel direction
    auto m = solve_class(r5, a, {{{ChowClass::parse(r5, "H^3")}, 4}});
    CHECK(m.status == SolveStatus::NonUnique);
    CHECK(m.solution_dim == 1);
}

TEST_CASE("solve_class rejects non-integer solutions") {
    const auto& r3 = ChowAmbient::builtin("RANK3");
    ChowAnsatz a{ChowClass::zero(r3), {ChowClass::parse(r3, "H")}};
    // cH * H^3 = 2c = 1 has no integer solution
    auto r = solve_class(r3, a, {{{ChowClass::parse(r3, "H^3")}, 1}});
    CHECK(r.status == SolveStatus::NoSolution);
}

TEST_CASE("degree bookkeeping errors") {
    const auto& r5 = ChowAmbient::builtin("RANK5");
    ChowClass H = ChowClass::parse(r5, "H");
    CHECK_THROWS_AS((void)chow_intersect(r5, {H, H}), Error); // degree 2 != 4
    const auto& gr = ChowAmbient::builtin("GR13");
    ChowClass ga = ChowClass::parse(gr, "a");
    CHECK_THROWS_AS((void)(H + ga), Error); // mixed ambients
}

TEST_CASE("describe lists generators and table rows") {
    const auto& gr = ChowAmbient::builtin("GR13");
    std::string s = chow_describe(gr);
    CHECK(s.find("GR13") != std::string::npos);
    CHECK(s.find('a') != std::string::npos);
}

TEST_SUITE_END();
