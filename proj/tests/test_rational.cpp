#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "cuspdim/rational.hpp"

using cuspdim::Rational;
using cuspdim::UnitPhase;

TEST(Rational, LowestTermsAndSign) {
    const Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(r.str(), "-3/4");
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, FloorCeilFrac) {
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(-7, 3).ceil(), -2);
    EXPECT_EQ(Rational(7, 3).frac(), Rational(1, 3));
    EXPECT_EQ(Rational(-7, 3).frac(), Rational(2, 3));
    EXPECT_EQ(Rational(5).ceil(), 5);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "-5", "17/24", "-1/8"}) EXPECT_EQ(Rational::parse(s).str(), s);
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_THROW(Rational::parse("1/0"), std::logic_error);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (b.num() != 0) {
            EXPECT_EQ((a / b) * b, a);
        }
        if (a != b) {
            EXPECT_EQ(a < b, a.to_double() < b.to_double());
        }
    }
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(UnitPhase, ReducesModuloOne) {
    EXPECT_EQ(UnitPhase::e(Rational(25, 24)), UnitPhase::e(Rational(1, 24)));
    EXPECT_EQ(UnitPhase::e(Rational(-1, 4)).turns(), Rational(3, 4));
    EXPECT_TRUE(UnitPhase::e(Rational(3)).is_one());
    EXPECT_EQ(UnitPhase::e(Rational(5, 12)).order(), 12);
}

TEST(UnitPhase, GroupLaws) {
    const UnitPhase a = UnitPhase::e(Rational(7, 24)), b = UnitPhase::e(Rational(-5, 8));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a.pow(24), UnitPhase::one());
    EXPECT_EQ(a.pow(-3), a.inverse().pow(3));
    EXPECT_EQ(a / b, a * b.inverse());
    const auto z = UnitPhase::e(Rational(1, 4)).to_complex();
    EXPECT_NEAR(z.real(), 0.0, 1e-15);
    EXPECT_NEAR(z.imag(), 1.0, 1e-15);
}
