#include <catch2/catch.hpp>

#include <random>
#include <vector>

#include "kpd/poly_expr.hpp"
#include "test_support.hpp"

using kpd::format_chern;
using kpd::format_hilbert;
using kpd::parse_poly;
using kpd::Rational;
using kpd::SyntaxError;
using kpd::UniPoly;
using kpd::WrongVariable;
using kpdtest::poly;
using kpdtest::series;

namespace {

std::vector<Rational> coeffs(std::vector<std::string> c) {
    std::vector<Rational> v;
    for (const std::string& s : c) v.push_back(Rational::parse(s));
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

} // namespace

TEST_CASE("grammar examples") {
    CHECK(parse_poly("1 - 3x + 2x^2", 'x') == coeffs({"1", "-3", "2"}));
    CHECK(parse_poly("1/2 t^2 + 3/2 t + 1", 't') == coeffs({"1", "3/2", "1/2"}));
    CHECK_THROWS_AS(parse_poly("1 + y", 'x'), WrongVariable);
}

TEST_CASE("term forms") {
    CHECK(parse_poly("3*t", 't') == coeffs({"0", "3"}));
    CHECK(parse_poly("3 t", 't') == coeffs({"0", "3"}));
    CHECK(parse_poly("3t", 't') == coeffs({"0", "3"}));
    CHECK(parse_poly("-t", 't') == coeffs({"0", "-1"}));
    CHECK(parse_poly("+t", 't') == coeffs({"0", "1"}));
    CHECK(parse_poly("t", 't') == coeffs({"0", "1"}));
    CHECK(parse_poly("7", 't') == coeffs({"7"}));
    CHECK(parse_poly("-7/3", 't') == coeffs({"-7/3"}));
    CHECK(parse_poly("t^0", 't') == coeffs({"1"}));
    CHECK(parse_poly("x ^ 3", 'x') == coeffs({"0", "0", "0", "1"}));
    CHECK(parse_poly("2 / 4", 'x') == coeffs({"1/2"}));
    CHECK(parse_poly("0", 'x').empty());
    CHECK(parse_poly("123456789012345678901234567890", 't') ==
          std::vector<Rational>{Rational(kpd::Int("123456789012345678901234567890"))});
}

TEST_CASE("repeated powers accumulate") {
    CHECK(parse_poly("x + x", 'x') == coeffs({"0", "2"}));
    CHECK(parse_poly("x^2 - x^2 + 1", 'x') == coeffs({"1"}));
    CHECK(parse_poly("1 + t - 1", 't') == coeffs({"0", "1"}));
}

TEST_CASE("syntax errors carry offsets") {
    CHECK_THROWS_AS(parse_poly("", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("   ", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1 +", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^-1", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1//2", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("2/0", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1 2", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("*x", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("3*", 'x'), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^100000", 'x'), SyntaxError);

    try {
        parse_poly("1 + y", 't');
        FAIL("expected WrongVariable");
    } catch (const WrongVariable& e) {
        CHECK(e.offset() == 4);
    }
    try {
        parse_poly("1 ? 2", 't');
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("chern formatting") {
    CHECK(format_chern(series({"1", "1", "1"})) == "1+x+x^2");
    CHECK(format_chern(series({"1", "-3", "2"})) == "1-3x+2x^2");
    CHECK(format_chern(series({"1", "2", "4"})) == "1+2x+4x^2");
    CHECK(format_chern(series({"1", "0", "0"})) == "1");
    CHECK(format_chern(series({"0", "0"})) == "0");
    CHECK(format_chern(series({"0", "-1", "0"})) == "-x");
}

TEST_CASE("hilbert formatting") {
    CHECK(format_hilbert(poly({"0", "1/2", "1/2"})) == "1/2*t^2 + 1/2*t");
    CHECK(format_hilbert(poly({"1", "2"})) == "2*t + 1");
    CHECK(format_hilbert(poly({"1", "1"})) == "t + 1");
    CHECK(format_hilbert(poly({"-1", "1"})) == "t - 1");
    CHECK(format_hilbert(poly({"2", "-3", "1"})) == "t^2 - 3*t + 2");
    CHECK(format_hilbert(UniPoly()) == "0");
    CHECK(format_hilbert(poly({"0", "-1"})) == "-t");
}

TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 150; ++i) {
        const auto p = UniPoly(kpdtest::random_series(6, rng).coeffs());
        const auto back = parse_poly(format_hilbert(p), 't');
        CHECK(UniPoly(std::vector<Rational>(back)) == p);
    }
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int i = 0; i < 150; ++i) {
        std::vector<Rational> v;
        for (int k = 0; k <= 5; ++k) v.push_back(Rational(entry(rng)));
        const kpd::TruncatedSeries<Rational> s(5, v);
        auto back = parse_poly(format_chern(s), 'x');
        back.resize(6, Rational(0));
        CHECK(kpd::TruncatedSeries<Rational>(5, back) == s);
    }
}
