#include "support.hpp"

#include <gtest/gtest.h>

using namespace hsum;
using hsum::testing::Gen;

namespace {

std::size_t error_offset(std::string_view text)
{
    try {
        (void)parse_poly(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return std::string_view::npos;
}

std::string error_text(std::string_view text)
{
    try {
        (void)parse_poly(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(ParsePoly, Examples)
{
    EXPECT_EQ(parse_poly("3*m^2+m"), (Polynomial{0, 1, 3}));
    EXPECT_EQ(parse_poly("1"), Polynomial::constant(1));
    EXPECT_EQ(parse_poly("(m-1)^2"), (Polynomial{1, -2, 1}));
}

TEST(ParsePoly, Grammar)
{
    EXPECT_EQ(parse_poly(" 3 * n ^ 2 + n "), parse_poly("3m^2+m"));
    EXPECT_EQ(parse_poly("x^2/4 + 3x/4"), (Polynomial{0, Rational(3, 4), Rational(1, 4)}));
    EXPECT_EQ(parse_poly("-2/6"), Polynomial::constant(Rational(-1, 3)));
    EXPECT_EQ(parse_poly("n(n+1)/2"), (Polynomial{0, Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(parse_poly("2(m+1)(m-1)"), (Polynomial{-2, 0, 2}));
    EXPECT_EQ(parse_poly("m^(3)"), Polynomial::monomial(3));
    EXPECT_EQ(parse_poly("--m"), Polynomial::x());
    EXPECT_EQ(parse_poly("m^0"), Polynomial::constant(1));
    EXPECT_TRUE(parse_poly("m-m").is_zero());
}

TEST(ParsePoly, Errors)
{
    EXPECT_EQ(error_offset("3*k+1"), 2u);
    EXPECT_NE(error_text("3*k+1").find("unknown identifier"), std::string::npos);
    EXPECT_NE(error_text("m^(1/2)").find("division in exponent"), std::string::npos);
    EXPECT_NE(error_text("1/m").find("division by a non-constant"), std::string::npos);
    EXPECT_NE(error_text("m/0").find("division by zero"), std::string::npos);
    EXPECT_NE(error_text("m^1001").find("exponent too large"), std::string::npos);
    EXPECT_NE(error_text("m^(2000)").find("exponent too large"), std::string::npos);
    EXPECT_EQ(parse_poly("m^1000").degree(), 1000);
    EXPECT_NE(error_text("(m+1").find("expected ')'"), std::string::npos);
    EXPECT_EQ(error_offset("m+"), 2u);
    EXPECT_EQ(error_offset("m + 1 )"), 6u);
    EXPECT_EQ(error_offset(""), 0u);
    EXPECT_THROW((void)parse_poly("m^m"), ParseError);
    EXPECT_THROW((void)parse_poly("2.5m"), ParseError);
}

TEST(ParsePolyProperty, RenderRoundTrip)
{
    Gen g(81);
    for (int i = 0; i < 300; ++i) {
        const Polynomial p = g.polynomial(8);
        EXPECT_EQ(parse_poly(poly_to_string(p)), p) << poly_to_string(p);
        EXPECT_EQ(parse_poly(poly_to_string(p, 'm')), p);
    }
}
