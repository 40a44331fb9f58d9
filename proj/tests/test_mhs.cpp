#include "support.hpp"

#include <gtest/gtest.h>

using namespace hsum;
using hsum::testing::Gen;

namespace {

/// Plain nested loops over n >= n_1 > ... > n_r > 0.
Rational nested(unsigned n, const Composition& k, std::size_t pos = 0, long below = -1)
{
    if (pos == k.depth())
        return Rational(1);
    const long top = pos == 0 ? static_cast<long>(n) : below - 1;
    Rational acc;
    for (long m = top; m >= 1; --m)
        acc += int_power(m, -k[pos]) * nested(n, k, pos + 1, m);
    return acc;
}

} // namespace

TEST(Mhs, Examples)
{
    EXPECT_EQ(mhs_eval(9, {}), Rational(1));
    EXPECT_EQ(mhs_eval(0, {}), Rational(1));
    EXPECT_EQ(mhs_eval(2, {1, 1, 1}), Rational(0));
    EXPECT_EQ(mhs_eval(3, {1, 1}), Rational(1));
    EXPECT_EQ(mhs_eval(4, {2}), Rational(205, 144));
}

TEST(Mhs, Harmonic)
{
    EXPECT_EQ(harmonic(3), Rational(11, 6));
    EXPECT_EQ(harmonic(0, 4), Rational(0));
    EXPECT_EQ(harmonic(2, 3), Rational(9, 8));
}

TEST(Mhs, ExtendedFirstEntry)
{
    // H_n(0,1) = sum_{m<=n} H_{m-1}
    EXPECT_EQ(mhs_eval(3, {0, 1}), Rational(0) + Rational(1) + Rational(3, 2));
    EXPECT_EQ(mhs_eval(4, {-2}), Rational(1 + 4 + 9 + 16));
}

TEST(Mhs, RejectsInnerNonpositiveEntries)
{
    try {
        (void)mhs_eval(5, {1, 0});
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("not a supported extended shape"), std::string::npos);
    }
    EXPECT_THROW((void)mhs_prefix(5, {-1, 2, -3}), std::invalid_argument);
}

TEST(MhsProperty, MatchesNestedLoops)
{
    Gen g(31);
    for (int i = 0; i < 150; ++i) {
        Composition k = g.composition(6);
        if (!k.empty() && g.integer(0, 2) == 0)
            k = k.tail().prepend(g.integer(-3, 0));
        const unsigned n = static_cast<unsigned>(g.integer(0, 9));
        const auto prefix = mhs_prefix(n, k);
        ASSERT_EQ(prefix.size(), n + 1);
        for (unsigned m = 0; m <= n; ++m)
            ASSERT_EQ(prefix[m], nested(m, k)) << k << " n=" << m;
    }
}

TEST(MhsProperty, VanishesBelowDepth)
{
    for (std::size_t r = 1; r <= 5; ++r)
        for (unsigned n = 0; n < r; ++n)
            EXPECT_TRUE(mhs_eval(n, ones(r)).is_zero());
}

TEST(Composition, ParseAndPrint)
{
    EXPECT_EQ(Composition::parse(" 1, 2 ,3"), (Composition{1, 2, 3}));
    EXPECT_EQ(Composition::parse(""), Composition{});
    EXPECT_EQ(Composition::parse("-2,1").str(), "-2,1");
    EXPECT_THROW((void)Composition::parse("1,,2"), std::invalid_argument);
    EXPECT_THROW((void)Composition::parse("1,a"), std::invalid_argument);
}

TEST(Composition, Shapes)
{
    EXPECT_TRUE((Composition{1, 2}).is_proper());
    EXPECT_FALSE((Composition{0, 2}).is_proper());
    EXPECT_TRUE((Composition{-3, 2}).is_extended());
    EXPECT_FALSE((Composition{1, -3}).is_extended());
    EXPECT_EQ((Composition{2, 1, 3}).weight(), 6);
    EXPECT_EQ((Composition{2, 1, 3}).tail(2), Composition{3});
}

TEST(Composition, Enumeration)
{
    // 2^(w-1) compositions of each weight w >= 1, plus the empty one
    const auto all = proper_compositions(5);
    EXPECT_EQ(all.size(), 1u + 1 + 2 + 4 + 8 + 16);
    EXPECT_TRUE(all.front().empty());
    for (std::size_t i = 1; i < all.size(); ++i)
        EXPECT_TRUE(CanonicalOrder{}(all[i - 1], all[i]));
    for (const auto& k : proper_compositions(6, 2))
        EXPECT_LE(k.depth(), 2u);
}
