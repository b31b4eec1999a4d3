#include <cstdlib>
#include <random>

#include "lamkit/numeric.hpp"
#include "test_support.hpp"

namespace lamkit {
namespace {

TEST(ParseRational, FractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("17"), Rational(17));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("-2.5e-1"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("3e2"), Rational(300));
    EXPECT_EQ(parse_rational("010"), Rational(10));
    EXPECT_EQ(parse_rational("007/010"), Rational(7, 10));
    EXPECT_EQ(parse_rational("3/-6"), Rational(-1, 2));
}

TEST(ParseRational, RejectsGarbage) {
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational("1.2.3"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("0x10"), ParseError);
}

TEST(ParseReal, RejectsGarbage) { EXPECT_THROW(parse_real("one"), ParseError); }

TEST(ToDecimal, RoundTripsAtWorkingPrecision) {
    const Real x = pi() / 7;
    EXPECT_EQ(parse_real(to_decimal(x)), x);
}

TEST(Rationalize, RecoversSmallFractions) {
    EXPECT_EQ(rationalize(Real(1) / 3), Rational(1, 3));
    EXPECT_EQ(rationalize(Real(-22) / 7), Rational(-22, 7));
    EXPECT_EQ(rationalize(Real(5)), Rational(5));
}

TEST(Rationalize, BestApproximationOfPi) {
    EXPECT_EQ(rationalize(pi(), Integer(1000)), Rational(355, 113));
    EXPECT_EQ(rationalize(pi(), Integer(100)), Rational(311, 99));
    EXPECT_EQ(rationalize(pi(), Integer(7)), Rational(22, 7));
}

TEST(Rationalize, RespectsDenominatorBound) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int t = 0; t < 200; ++t) {
        const Real x = Real(u(rng)) / 3;
        const Integer bound(1 + t * 37);
        const Rational q = rationalize(x, bound);
        EXPECT_LE(mp::denominator(q), bound);
        EXPECT_LE(to_double(mp::abs(to_real(q) - x)), 1.0 / to_double(Real(bound)));
    }
    EXPECT_THROW(rationalize(Real(1), Integer(0)), InvalidParameter);
}

TEST(PrecisionGuard, ChangesAndRestoresPrecision) {
    const unsigned before = Real::default_precision();
    {
        const PrecisionGuard guard(256);
        EXPECT_EQ(Real::default_precision(), bits_to_digits10(256));
        const Real third = Real(1) / 3;
        EXPECT_LT(to_double(mp::abs(third * 3 - 1)), 1e-70);
    }
    EXPECT_EQ(Real::default_precision(), before);
    EXPECT_THROW(PrecisionGuard(32), InvalidParameter);
}

TEST(PrecisionFromEnvironment, ReadsOverride) {
    ::unsetenv("LAMKIT_PRECISION");
    EXPECT_EQ(precision_from_environment(), kDefaultPrecisionBits);
    ::setenv("LAMKIT_PRECISION", "200", 1);
    EXPECT_EQ(precision_from_environment(), 200u);
    ::setenv("LAMKIT_PRECISION", "12", 1);
    EXPECT_THROW(precision_from_environment(), InvalidParameter);
    ::setenv("LAMKIT_PRECISION", "lots", 1);
    EXPECT_THROW(precision_from_environment(), InvalidParameter);
    ::unsetenv("LAMKIT_PRECISION");
}

TEST(ApproxEqual, AbsoluteNearZeroRelativeAway) {
    EXPECT_TRUE(approx_equal(Real("1e-14"), Real(0)));
    EXPECT_FALSE(approx_equal(Real("1e-10"), Real(0)));
    EXPECT_TRUE(approx_equal(Real("1e6") + Real("1e-7"), Real("1e6")));
    EXPECT_TRUE(relative_close(Real(2), Real(2) + Real("1e-13"), 1e-12));
    EXPECT_FALSE(relative_close(Real(2), Real("2.001"), 1e-12));
}

}  // namespace
}  // namespace lamkit
