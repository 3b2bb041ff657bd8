#include <doctest.h>

#include "z2tk/exact_arith.hpp"
#include "z2tk/expr_parser.hpp"

using namespace z2tk;

namespace {
RationalFunction rf(const char* s) { return parse_rational_function(s); }
GaussianRational gr(const char* s) { return parse_gaussian_rational(s); }
} // namespace

TEST_SUITE("exact_arith") {

TEST_CASE("gaussian rationals") {
    CHECK(gr("1/2+3/4*i") * gr("4") == gr("2+3*i"));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(gr("1+i") / gr("1-i") == GaussianRational::i());
    CHECK_THROWS_AS(gr("1") / gr("0"), DivisionByZero);
    CHECK_THROWS_AS(gr("0.5"), ParseError);
    CHECK(gr("-2/4").to_string() == "-1/2");
}

TEST_CASE("rf_arith examples") {
    CHECK(rf_arith(rf("E"), rf("lambda"), ArithOp::add) == rf("E+lambda"));
    CHECK(rf_arith(rf("lambda^2-lambda*E^2"), rf("lambda"), ArithOp::div) == rf("lambda-E^2"));
    CHECK(rf_arith(rf("lambda^2-lambda*E^2"), rf("lambda"), ArithOp::div).is_polynomial());
    CHECK_THROWS_AS(rf_arith(rf("1"), rf("0"), ArithOp::div), DivisionByZero);
    CHECK(rf_arith(rf("E"), rf("E"), ArithOp::sub).is_zero());
}

TEST_CASE("rf_specialize examples") {
    CHECK(rf_specialize(rf("(lambda-E^2)/lambda"), 1, 2) == GaussianRational::rational(1, 2));
    CHECK(rf_specialize(rf("lambda-E^2"), 2, 4).is_zero());
    CHECK_THROWS_AS(rf_specialize(rf("1/lambda"), 1, 0), PoleError);
    CHECK(rf_specialize(rf("i*E"), gr("i"), 0) == GaussianRational(-1));
}

TEST_CASE("rf_is_zero examples") {
    CHECK(rf_is_zero(rf("(lambda-E^2)-(lambda-E^2)")));
    CHECK_FALSE(rf_is_zero(rf("lambda-E^2")));
    CHECK(rf_is_zero(rf("(E*lambda)/lambda - E")));
}

TEST_CASE("canonical form is unique") {
    RationalFunction a = rf("(E^2-lambda)/(2*E+2)");
    RationalFunction b = rf("(2*lambda-2*E^2)/(-4*E-4)");
    CHECK(a == b);
    CHECK(a.to_string() == b.to_string());
    CHECK(rf_recanonicalize(a).to_string() == a.to_string());
}

TEST_CASE("json round trip") {
    RationalFunction a = rf("(3/2*i*E^2 - lambda)/(E + 1/3)");
    CHECK(rational_function_from_json(to_json(a)) == a);
}

TEST_CASE("gcd") {
    BiPoly x = BiPoly::E() - BiPoly::lambda();
    BiPoly y = BiPoly::E() + BiPoly(GaussianRational(1));
    BiPoly g = gcd(x * y, y * y);
    CHECK(divide_exact(g, y).is_constant());
}

} // TEST_SUITE
