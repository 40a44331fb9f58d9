#include "support.hpp"

#include <gtest/gtest.h>

using namespace hsum;
using hsum::testing::Gen;
using hsum::testing::P;

namespace {

ClosedForm flat(std::string_view poly, const MHSCombination& m) { return cf_scale(from_combination(m), P(poly)); }
ClosedForm term(std::string_view poly, Composition k) { return ClosedForm::single(std::move(k), P(poly)); }

} // namespace

TEST(SumPower, Examples)
{
    EXPECT_EQ(sum_power(P("1"), 2), flat("n", expand_power(1, 2)) - term("2n+1", {1}) + ClosedForm::polynomial(P("2n")));
    EXPECT_EQ(sum_power(P("m"), 2), flat("n(n+1)/2", expand_power(1, 2)) - term("(n^2+3n+1)/2", {1})
                                        + ClosedForm::polynomial(P("n(n+5)/4")));
    EXPECT_EQ(sum_power(P("1"), 0), ClosedForm::polynomial(P("n")));
    EXPECT_TRUE(sum_power(Polynomial{}, 3).is_zero());
}

TEST(SumPower, MatchesDirectSummation)
{
    Gen g(71);
    for (int i = 0; i < 25; ++i) {
        const Polynomial f = g.polynomial(4);
        const unsigned t = static_cast<unsigned>(g.integer(0, 4));
        EXPECT_EQ(cf_eval_prefix(sum_power(f, t), 30), direct_power_sum_prefix(f, t, 30)) << poly_to_string(f) << " t=" << t;
        EXPECT_EQ(cf_eval_prefix(sum_power_shifted(f, t), 30), direct_power_sum_prefix(f, t, 30, true));
    }
}

TEST(SumPowerShifted, Examples)
{
    EXPECT_EQ(sum_power_shifted(P("1"), 0), ClosedForm::polynomial(P("n+1")));
    // the (2k+1) and (3k^2+k) sums move to (2m-1) and (3m^2-5m+2) under the shift
    EXPECT_EQ(sum_power_shifted(P("2m+1"), 4), flat("2n+1", expand_power(1, 4)) + sum_power(P("2m-1"), 4));
    EXPECT_EQ(sum_power_shifted(P("3m^2+m"), 4), flat("3n^2+n", expand_power(1, 4)) + sum_power(P("3m^2-5m+2"), 4));
}

TEST(SumPowerShifted, CubeCarriesHalfMinusBernoulliOnH2)
{
    // flat H(2) coefficient minus half the H(1,1) coefficient isolates the
    // H_n(2) term of the H_n^3, H_n^2, H_n presentation
    for (unsigned d = 0; d <= 8; ++d) {
        const ClosedForm c = sum_power_shifted(Polynomial::monomial(d), 3);
        const Polynomial isolated = c.coeff({2}) - c.coeff({1, 1}) * Rational(1, 2);
        EXPECT_EQ(isolated, Polynomial::constant(bernoulli(d, Convention::minus) / Rational(2))) << d;
    }
}

TEST(SumProduct, Examples)
{
    EXPECT_EQ(sum_product(P("1"), {{1, 1}, {2, 1}}), flat("n", stuffle({1}, {2})) - flat("1/2", expand_power(1, 2))
                                                         - term("(2n+1)/2", {2}) + term("1", {1}));
    EXPECT_EQ(sum_product(P("m"), {{1, 1}, {2, 1}}),
              flat("n(n+1)/2", stuffle({1}, {2})) - flat("1/4", expand_power(1, 2)) - term("(n^2+3n+1)/4", {2})
                  + term("(1-2n)/4", {1}) + ClosedForm::polynomial(P("3n/4")));
    EXPECT_EQ(sum_product(P("1"), {{1, 2}}), sum_power(P("1"), 2));
}

TEST(SumProduct, MatchesDirectSummation)
{
    const std::vector<std::vector<Factor>> cases{{{2, 1}}, {{1, 1}, {3, 1}}, {{2, 2}}, {{1, 2}, {2, 1}}, {{1, 1}, {1, 1}}};
    for (const auto& fac : cases)
        for (const char* f : {"1", "m", "2m^2-m+5"})
            EXPECT_EQ(cf_eval_prefix(sum_product(P(f), fac), 25), direct_sum_prefix(P(f), fac, 25));
}

TEST(SpiessForm, Hn2ZeroReproducesPrintedCoefficients)
{
    const auto s = spiess_form(SpiessKind::hn2, 0u);
    EXPECT_EQ(s.leading, P("n"));
    ASSERT_EQ(s.q.size(), 2u);
    EXPECT_EQ(s.q[1], P("-(2n+1)"));
    EXPECT_EQ(s.q[0], P("2n"));
    EXPECT_EQ(structured_to_closed(s), sum_power(P("1"), 2));
    EXPECT_EQ(structured_to_string(s), "(n)*H^2 + (-2*n - 1)*H + (2*n)");
}

TEST(SpiessForm, MixedOneEndsWithThreeQuartersN)
{
    const auto s = spiess_form(SpiessKind::mixed, 1u);
    EXPECT_EQ(s.q[0], P("3n/4"));
    EXPECT_EQ(s.q[1], P("(1-2n)/4"));
    EXPECT_EQ(s.q[2], P("-1/4"));
    EXPECT_EQ(s.c2, P("-(n^2+3n+1)/4"));
}

TEST(SpiessForm, AllKindsMatchTheFlatRoute)
{
    for (unsigned p = 0; p <= 6; ++p) {
        const Polynomial mp = Polynomial::monomial(p);
        EXPECT_EQ(structured_to_closed(spiess_form(SpiessKind::hn2, p)), sum_power(mp, 2)) << p;
        EXPECT_EQ(structured_to_closed(spiess_form(SpiessKind::hn3, p)), sum_power(mp, 3)) << p;
        EXPECT_EQ(structured_to_closed(spiess_form(SpiessKind::mixed, p)), sum_product(mp, {{1, 1}, {2, 1}})) << p;
        EXPECT_EQ(structured_to_closed(spiess_form(SpiessKind::hn4, p)), sum_power(mp, 4)) << p;
    }
}

TEST(SpiessForm, Hn4ForPolynomials)
{
    for (const char* f : {"1", "m", "m^2", "2m-1", "3m^2-5m+2", "m^3-m/2+7"})
        EXPECT_EQ(structured_to_closed(spiess_form(SpiessKind::hn4, P(f))), sum_power(P(f), 4)) << f;
}

TEST(SpiessForm, Hn4DropsDepthTwoAndThreeTermsWhenFOfBVanishes)
{
    for (const char* f : {"2m-1", "3m^2-5m+2"}) {
        EXPECT_TRUE(umbral_eval(P(f)).is_zero());
        const auto s = spiess_form(SpiessKind::hn4, P(f));
        EXPECT_TRUE(s.c21.is_zero()) << f;
        EXPECT_TRUE(s.c3.is_zero()) << f;
    }
    EXPECT_FALSE(spiess_form(SpiessKind::hn4, P("m")).c3.is_zero());
}

TEST(SpiessForm, ZeroForm)
{
    EXPECT_TRUE(structured_to_closed(StructuredForm{}).is_zero());
    EXPECT_TRUE(structured_to_closed(spiess_form(SpiessKind::hn3, Polynomial{})).is_zero());
}

TEST(StructureCheck, Examples)
{
    const auto r = structure_check(P("1"), 2);
    EXPECT_TRUE(r.passes);
    EXPECT_EQ(r.remainder, ClosedForm::polynomial(P("2n")) - term("2n+1", {1}));
    const auto z = structure_check(P("1"), 0);
    EXPECT_TRUE(z.passes);
    EXPECT_TRUE(z.remainder.is_zero());
}

TEST(StructureCheckProperty, RandomPolynomials)
{
    Gen g(72);
    for (int i = 0; i < 100; ++i) {
        const Polynomial f = g.polynomial(3);
        const unsigned t = static_cast<unsigned>(g.integer(0, 4));
        const auto r = structure_check(f, t);
        EXPECT_TRUE(r.passes) << poly_to_string(f) << " t=" << t;
        for (const auto& [k, p] : r.remainder.terms()) {
            EXPECT_LT(k.depth(), std::max(t, 1u));
            EXPECT_LE(p.degree(), f.degree() + 1);
        }
    }
}
