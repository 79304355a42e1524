#include "doctest.h"

#include "hk3/io.hpp"
#include "hk3/verify.hpp"

using namespace hk3;
using io::json;

TEST_CASE("parse inputs")
{
    CHECK(io::parse_rational(json("1/2"), "x") == Rational(1, 2));
    CHECK(io::parse_rational(json("-6/4"), "x") == ratio(-3, 2));
    CHECK(io::parse_rational(json(7), "x") == 7);
    CHECK(io::parse_eis(json::parse("[2,-1]"), "x") == Eis(2, -1));
    CHECK(io::parse_tower(json::parse(R"(["0","0","2","0"])"), "x") == Tower(2) * Tower::i());

    CHECK_THROWS_WITH_AS(io::parse_rational(json("1/0"), "lambda[0]"),
                         doctest::Contains("lambda[0]"), io::ParseError);
    CHECK_THROWS_AS(io::parse_rational(json("abc"), "x"), io::ParseError);
    CHECK_THROWS_AS(io::parse_rational(json(0.5), "x"), io::ParseError);
    CHECK_THROWS_WITH_AS(io::parse_eis(json::parse("[1]"), "m[2][3]"), doctest::Contains("m[2][3]"),
                         io::ParseError);
    CHECK_THROWS_WITH_AS(io::parse_orth(json::parse("[[1,2],[3,4]]"), "matrix"),
                         doctest::Contains("matrix"), io::ParseError);
    CHECK_THROWS_AS(io::read_document("[1,"), io::ParseError);
    CHECK_THROWS_AS(io::read_document("@/nonexistent/file.json"), io::ParseError);
}

TEST_CASE("round trip through json")
{
    const Tower t(ratio(1, 3), -2, 0, ratio(5, 7));
    CHECK(io::parse_tower(io::to_json(t), "t") == t);
    const Eis e(-4, 9);
    CHECK(io::parse_eis(io::to_json(e), "e") == e);
    const PeriodPoint z = dm_from_chart(2 * Tower::i(), 2 * Tower::i(), 0, 0);
    CHECK(io::parse_z(io::to_json(z), "z") == z);
    CHECK(io::parse_orth(io::to_json(named::g1()), "g") == named::g1());
    CHECK(io::parse_lambda(json::parse(R"(["1","2","3/4",5,"-1"])"), "l")[2] == Rational(3, 4));
}

TEST_CASE("verify reports are deterministic")
{
    const auto a = run_verify("delta-km", 5).text();
    const auto b = run_verify("delta-km", 5).text();
    CHECK(a == b);
    CHECK(run_verify("hessian", 9).text() == run_verify("hessian", 9).text());
    CHECK(run_verify("hessian", 9).ok());
    CHECK_THROWS_AS(run_verify("nope", 1), Error);
    CHECK(verify_suites().back() == "all");
}
