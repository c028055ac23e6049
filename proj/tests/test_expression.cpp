#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vlab/expression.hpp"
#include "vlab/rng.hpp"

using namespace vlab;

TEST_CASE("basic arithmetic") {
    const auto e = parse_expression("x1^2 + x2^2", 2);
    CHECK(e.eval({3.0, 4.0}) == doctest::Approx(25.0));
}

TEST_CASE("radial bump at the origin") {
    const auto e = parse_expression("(1 - x1^2 - x2^2 - x3^2)^3", 3);
    CHECK(e.eval({0.0, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(e.eval({0.5, 0.0, 0.0}) == doctest::Approx(std::pow(0.75, 3.0)));
}

TEST_CASE("functions") {
    const auto e = parse_expression("min(abs(x1), exp(x2))", 2);
    CHECK(e.eval({-2.0, 0.0}) == doctest::Approx(1.0));
    CHECK(parse_expression("max(x1, 2)", 1).eval({5.0}) == doctest::Approx(5.0));
    CHECK(parse_expression("pow(x1, 3)", 1).eval({2.0}) == doctest::Approx(8.0));
    CHECK(parse_expression("log(exp(x1))", 1).eval({1.5}) == doctest::Approx(1.5));
    CHECK(parse_expression("sqrt(x1)", 1).eval({9.0}) == doctest::Approx(3.0));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_expression("2 + 3 * 4", 1).eval({0.0}) == doctest::Approx(14.0));
    // ^ binds tighter than unary minus
    CHECK(parse_expression("-x1^2", 1).eval({3.0}) == doctest::Approx(-9.0));
    // right-associative
    CHECK(parse_expression("2^3^2", 1).eval({0.0}) == doctest::Approx(512.0));
    // signed exponent
    CHECK(parse_expression("2^-2", 1).eval({0.0}) == doctest::Approx(0.25));
    CHECK(parse_expression("6 / 2 / 3", 1).eval({0.0}) == doctest::Approx(1.0));
    CHECK(parse_expression("1 - 2 - 3", 1).eval({0.0}) == doctest::Approx(-4.0));
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        parse_expression("x1 + ", 2);
        FAIL("expected ParseError");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::ParseError);
        CHECK(std::string(err.what()).find("byte 5") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expression("x3", 2), Error);
    CHECK_THROWS_AS(parse_expression("foo(x1)", 2), Error);
    CHECK_THROWS_AS(parse_expression("min(x1)", 2), Error);
    CHECK_THROWS_AS(parse_expression("(x1", 2), Error);
    CHECK_THROWS_AS(parse_expression("x1 x2", 2), Error);
    CHECK_THROWS_AS(parse_expression("", 2), Error);
}

TEST_CASE("evaluation domain errors are typed, not NaN") {
    const auto bad_log = parse_expression("log(x1)", 1);
    CHECK_THROWS_AS(bad_log.eval({-1.0}), Error);
    try {
        bad_log.eval({0.0});
        FAIL("expected EvalDomain");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::EvalDomain);
    }
    CHECK_THROWS_AS(parse_expression("sqrt(x1)", 1).eval({-4.0}), Error);
    CHECK_THROWS_AS(parse_expression("1 / x1", 1).eval({0.0}), Error);
    CHECK_THROWS_AS(parse_expression("x1^0.5", 1).eval({-1.0}), Error);
}

TEST_CASE("pretty-print round trip is structurally identical") {
    const char* corpus[] = {
        "x1^2 + x2^2",
        "(1 - x1^2 - x2^2 - x3^2)^3",
        "min(abs(x1), exp(x2)) * max(x1, -x2) / (1 + x1^2)",
        "-x1 ^ -2 + pow(x2, 3) - sqrt(abs(x1 * x2))",
        "log(1 + exp(-x1)) - 2.5e-3 * x2",
    };
    for (const char* src : corpus) {
        const auto e = parse_expression(src, 3);
        const auto round = parse_expression(e.str(), 3);
        CHECK(e.same_structure(round));
        CHECK(round.same_structure(e));
    }

    const auto a = parse_expression("x1 + x2", 2);
    const auto b = parse_expression("x2 + x1", 2);
    CHECK_FALSE(a.same_structure(b));
}

TEST_CASE("evaluation is deterministic") {
    const auto e = parse_expression("exp(x1) * min(x2, 0.5) - x1 / (x2 + 2)", 2);
    Rng rng(9ULL);
    for (int i = 0; i < 200; ++i) {
        const Vec x = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        CHECK(e.eval(x) == e.eval(x));
    }
}
