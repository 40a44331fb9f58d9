#include "support.hpp"

#include <gtest/gtest.h>

using namespace hsum;
using hsum::testing::Gen;
using hsum::testing::P;

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(0, 7), Rational(0));
    EXPECT_TRUE(Rational(8, 4).is_integer());
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("17"), Rational(17));
}

TEST(Rational, Errors)
{
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(int_power(0, -1), std::domain_error);
}

TEST(Rational, BinomialAndPowers)
{
    EXPECT_EQ(binomial(10, 3), Rational(120));
    EXPECT_EQ(binomial(3, 5), Rational(0));
    EXPECT_EQ(int_power(-2, 5), Rational(-32));
    EXPECT_EQ(int_power(3, -2), Rational(1, 9));
    EXPECT_EQ(to_int64(mpz_class(-42)), std::optional<std::int64_t>(-42));
    EXPECT_FALSE(to_int64(mpz_class("123456789012345678901234567890")).has_value());
}

TEST(Rational, Ordering)
{
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_GT(Rational(2, 3), Rational(3, 5));
}

TEST(Polynomial, Eval)
{
    EXPECT_EQ(poly_eval(P("x^2+x"), Rational(3)), Rational(12));
    EXPECT_EQ(poly_eval(Polynomial{}, Rational(5, 7)), Rational(0));
    // (x^4+2x^3+x^2)/4 at 3 against 1 + 8 + 27
    Rational direct;
    for (long m = 1; m <= 3; ++m)
        direct += int_power(m, 3);
    EXPECT_EQ(poly_eval(P("(x^4+2x^3+x^2)/4"), Rational(3)), direct);
}

TEST(Polynomial, Shift)
{
    EXPECT_EQ(poly_shift(P("x"), Rational(-1)), P("x-1"));
    EXPECT_EQ(poly_shift(P("x^2"), Rational(-1)), P("x^2-2x+1"));
    EXPECT_EQ(poly_shift(P("3x^2-5x+2"), Rational(1)), P("3x^2+x"));
}

TEST(Polynomial, Derivative)
{
    EXPECT_EQ(poly_derivative(P("x^3")), P("3x^2"));
    EXPECT_TRUE(poly_derivative(P("7/3")).is_zero());
    EXPECT_EQ(poly_derivative(P("x^2/4+3x/4")), P("x/2+3/4"));
}

TEST(Polynomial, DivideX)
{
    EXPECT_EQ(poly_divide_x(P("x^2+3x")), P("x+3"));
    EXPECT_TRUE(poly_divide_x(Polynomial{}).is_zero());
    EXPECT_EQ(poly_divide_x(c_poly(1, {0})), P("x/4+3/4"));
    try {
        (void)poly_divide_x(P("x+1"));
        FAIL() << "expected domain_error";
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "not divisible by x");
    }
}

TEST(Polynomial, DiscreteSum)
{
    EXPECT_EQ(discrete_sum(P("1")), P("x"));
    EXPECT_EQ(discrete_sum(P("x")), P("(x^2+x)/2"));
    EXPECT_EQ(discrete_sum(P("x^2")), P("x^3/3+x^2/2+x/6"));
    Rational acc;
    for (long n = 1; n <= 20; ++n) {
        acc += Rational(n * n);
        EXPECT_EQ(discrete_sum(P("x^2"))(Rational(n)), acc);
    }
}

TEST(Polynomial, Degree)
{
    EXPECT_EQ(Polynomial{}.degree(), -1);
    EXPECT_EQ(P("0*x^5+2").degree(), 0);
    EXPECT_EQ((P("x^2+1") - P("x^2")).degree(), 0);
}

TEST(Polynomial, Rendering)
{
    EXPECT_EQ(poly_to_string(P("3m^2+m-1/2")), "3*n^2 + n - 1/2");
    EXPECT_EQ(poly_to_string(P("-x")), "-n");
    EXPECT_EQ(poly_to_string(Polynomial{}), "0");
    EXPECT_EQ(poly_to_latex(P("n^2/2+n/2")), "\\frac{1}{2}n^{2}+\\frac{1}{2}n");
}

TEST(PolynomialProperty, ShiftRoundTrip)
{
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = g.polynomial(7);
        const Rational c = g.rational();
        EXPECT_EQ(poly_shift(poly_shift(p, c), -c), p);
        EXPECT_EQ(poly_shift(p, c)(Rational(2)), p(Rational(2) + c));
    }
}

TEST(PolynomialProperty, DiscreteSumMatchesDirectSummation)
{
    Gen g(12);
    for (int i = 0; i < 60; ++i) {
        const Polynomial f = g.polynomial(6);
        const Polynomial s = discrete_sum(f);
        EXPECT_TRUE(s(Rational(0)).is_zero());
        Rational acc;
        for (long n = 1; n <= 50; ++n) {
            acc += f(Rational(n));
            ASSERT_EQ(s(Rational(n)), acc) << poly_to_string(f) << " at n=" << n;
        }
    }
}

TEST(PolynomialProperty, RingLaws)
{
    Gen g(13);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = g.polynomial(5), b = g.polynomial(5), c = g.polynomial(5);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(poly_divide_x(poly_multiply_x(a)), a);
        const Rational x = g.rational();
        EXPECT_EQ((a * b)(x), a(x) * b(x));
        EXPECT_EQ(poly_derivative(a * b), poly_derivative(a) * b + a * poly_derivative(b));
    }
}
