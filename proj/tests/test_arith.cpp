#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "cuspdim/arith.hpp"

using namespace cuspdim;

TEST(Factorize, Examples) {
    const auto f = factorize(360);
    EXPECT_EQ(f.valuation(2), 3);
    EXPECT_EQ(f.valuation(3), 2);
    EXPECT_EQ(f.valuation(5), 1);
    EXPECT_EQ(f.valuation(7), 0);
    EXPECT_EQ(f.product(), 360);
    EXPECT_TRUE(factorize(1).factors.empty());
    EXPECT_EQ(factorize(9973).factors.size(), 1u);
    EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Factorize, ProductRecoversEveryN) {
    for (std::int64_t n = 1; n <= 5000; ++n) {
        const auto f = factorize(n);
        EXPECT_EQ(f.product(), n);
        for (auto [p, e] : f.factors) EXPECT_TRUE(is_prime(p)) << n;
    }
}

TEST(Divisors, SortedAndComplete) {
    EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(divisors(49), (std::vector<std::int64_t>{1, 7, 49}));
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::int64_t count = 0;
        for (std::int64_t d = 1; d <= n; ++d) count += (n % d == 0);
        EXPECT_EQ(static_cast<std::int64_t>(divisors(n).size()), count);
    }
}

TEST(EulerPhi, MatchesCoprimeCount) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(euler_phi(23), 22);
    for (std::int64_t n = 1; n <= 400; ++n) {
        std::int64_t count = 0;
        for (std::int64_t k = 1; k <= n; ++k) count += (std::gcd(k, n) == 1);
        EXPECT_EQ(euler_phi(n), count) << n;
    }
}

TEST(ExtendedGcd, Bezout) {
    for (std::int64_t a = -40; a <= 40; ++a)
        for (std::int64_t b = -40; b <= 40; ++b) {
            const auto r = extended_gcd(a, b);
            EXPECT_EQ(r.g, std::gcd(a, b));
            EXPECT_EQ(a * r.x + b * r.y, r.g);
        }
}

// (a/p) from the set of nonzero squares mod p
static int legendre_by_squares(std::int64_t a, std::int64_t p) {
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    const std::int64_t r = ((a % p) + p) % p;
    if (r == 0) return 0;
    return squares.count(r) ? 1 : -1;
}

TEST(Kronecker, LegendreOracleForOddPrimes) {
    for (std::int64_t p = 3; p < 200; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t a = -50; a <= 50; ++a) EXPECT_EQ(kronecker(a, p), legendre_by_squares(a, p)) << a << "/" << p;
    }
}

TEST(Kronecker, CharactersUsedByEllipticCounts) {
    // (-4/p) = 1 iff p = 1 mod 4; (-3/p) = 1 iff p = 1 mod 3
    for (std::int64_t p = 5; p < 1000; ++p) {
        if (!is_prime(p)) continue;
        EXPECT_EQ(kronecker(-4, p), p % 4 == 1 ? 1 : -1);
        EXPECT_EQ(kronecker(-3, p), p % 3 == 1 ? 1 : -1);
    }
    EXPECT_EQ(kronecker(-4, 2), 0);
    EXPECT_EQ(kronecker(-3, 3), 0);
    EXPECT_EQ(kronecker(-3, 2), -1);
    EXPECT_EQ(kronecker(1, 0), 1);
    EXPECT_EQ(kronecker(2, 0), 0);
}

TEST(Kronecker, MultiplicativeInBottom) {
    for (std::int64_t a = -30; a <= 30; ++a)
        for (std::int64_t m = 1; m <= 40; ++m)
            for (std::int64_t n = 1; n <= 40; ++n) EXPECT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
}

TEST(Sawtooth, OddAndPeriodic) {
    EXPECT_EQ(sawtooth(Rational(3)), Rational(0));
    EXPECT_EQ(sawtooth(Rational(1, 2)), Rational(0));
    EXPECT_EQ(sawtooth(Rational(1, 3)), Rational(-1, 6));
    for (std::int64_t p = -30; p <= 30; ++p)
        for (std::int64_t q = 1; q <= 12; ++q) {
            const Rational x(p, q);
            EXPECT_EQ(sawtooth(-x), -sawtooth(x));
            EXPECT_EQ(sawtooth(x + Rational(1)), sawtooth(x));
        }
}

TEST(DedekindSum, Examples) {
    EXPECT_EQ(dedekind_sum(0, 1), Rational(0));
    EXPECT_EQ(dedekind_sum(1, 2), Rational(0));
    EXPECT_EQ(dedekind_sum(1, 3), Rational(1, 18));
    EXPECT_EQ(dedekind_sum(2, 5), Rational(0));
    EXPECT_EQ(dedekind_sum(1, 5), Rational(1, 5));
    EXPECT_THROW(dedekind_sum(2, 4), std::invalid_argument);
    EXPECT_THROW(dedekind_sum(1, 0), std::invalid_argument);
}

// Independent computation through reciprocity and periodicity, a Euclid-style descent.
static Rational dedekind_by_reciprocity(std::int64_t d, std::int64_t c) {
    d = ((d % c) + c) % c;
    if (c == 1 || d == 0) return Rational(0);
    const Rational r = (Rational(d, c) + Rational(c, d) + Rational(1, c * d)) / Rational(12) - Rational(1, 4);
    return r - dedekind_by_reciprocity(c, d);
}

TEST(DedekindSum, ReciprocityAndSymmetry) {
    for (std::int64_t c = 1; c <= 200; ++c)
        for (std::int64_t d = -c; d <= 2 * c; ++d) {
            if (std::gcd(d, c) != 1) continue;
            const Rational s = dedekind_sum(d, c);
            EXPECT_EQ(s, dedekind_by_reciprocity(d, c)) << d << "," << c;
            EXPECT_EQ(dedekind_sum(-d, c), -s);
            // 6 c s(d, c) is an integer
            EXPECT_TRUE((s * Rational(6 * c)).is_integer());
        }
}
