#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cuspdim/gamma0.hpp"
#include "cuspdim/qseries.hpp"

using namespace cuspdim;

static std::vector<Rational> ints(std::initializer_list<std::int64_t> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

// prod_{n >= 1} (1 - q^n) by repeated multiplication, truncated at P terms
static std::vector<std::int64_t> naive_euler_product(std::size_t P) {
    std::vector<std::int64_t> c(P, 0);
    c[0] = 1;
    for (std::size_t n = 1; n < P; ++n)
        for (std::size_t k = P; k-- > n;) c[k] -= c[k - n];
    return c;
}

TEST(QSeries, EtaLeadingCoefficients) {
    const FracQSeries eta = eta_expansion(8);
    EXPECT_EQ(eta.offset(), Rational(1, 24));
    EXPECT_EQ(eta.step(), Rational(1));
    EXPECT_EQ(eta.coeffs(), ints({1, -1, -1, 0, 0, 1, 0, 1}));
}

TEST(QSeries, EtaMatchesDirectProduct) {
    const std::size_t P = 400;
    const auto naive = naive_euler_product(P);
    const FracQSeries eta = eta_expansion(P);
    for (std::size_t k = 0; k < P; ++k) EXPECT_EQ(eta[k], Rational(naive[k])) << k;
}

TEST(QSeries, EtaCubedLeadingTerms) {
    const FracQSeries e3 = eta_cubed(10);
    EXPECT_EQ(e3.offset(), Rational(1, 8));
    EXPECT_EQ(e3.coeffs(), ints({1, -3, 0, 5, 0, 0, -7, 0, 0, 0}));
    EXPECT_EQ(theta_S(2, 1, 10), e3);
}

TEST(QSeries, ThetaExamples) {
    const FracQSeries t31 = theta_S(3, 1, 10);
    EXPECT_EQ(t31.offset(), Rational(1, 12));
    EXPECT_EQ(t31[0], Rational(1));
    const FracQSeries t32 = theta_S(3, 2, 10);
    EXPECT_EQ(t32.coefficient_at(Rational(16, 12)), Rational(-4));
    EXPECT_THROW(theta_S(1, 0, 10), std::invalid_argument);
    EXPECT_THROW(theta_S(3, 3, 10), std::invalid_argument);
}

TEST(QSeries, DiscriminantFromEtaQuotient) {
    const FracQSeries delta = eta_quotient_expansion(EtaQuotient(1, {{1, 24}}), 6);
    EXPECT_EQ(delta.offset(), Rational(1));
    EXPECT_EQ(delta.coeffs(), ints({1, -24, 252, -1472, 4830, -6048}));
}

TEST(QSeries, Level23Form) {
    const EtaQuotient f = level23_weight2_form();
    EXPECT_EQ(f.leading_exponent(), Rational(2));
    EXPECT_EQ(f.weight(), Rational(2));
    const FracQSeries e = eta_quotient_expansion(f, 5);
    EXPECT_EQ(e.offset(), Rational(2));
    EXPECT_EQ(e[0], Rational(1));
    EXPECT_EQ(e.coeffs(), ints({1, -2, -1, 2, 1}));
    Rational total;
    for (const auto& c : cusps(23)) {
        const Rational ord = eta_quotient_cusp_order(f, c);
        EXPECT_EQ(ord, Rational(2)) << c.representative.str();
        total += ord;
    }
    EXPECT_EQ(total, Rational(4));
    EXPECT_EQ(total, Rational(2, 12) * Rational(index(23)));
}

TEST(QSeries, CuspOrderAtInfinityMatchesExpansion) {
    for (std::int64_t N : {6, 10, 12, 23, 46}) {
        std::map<std::int64_t, int> r;
        for (auto d : divisors(N)) r[d] = (d % 2 == 0) ? 2 : -1;
        const EtaQuotient eq(N, r);
        for (const auto& c : cusps(N)) {
            if (c.d == N) {
                EXPECT_EQ(eta_quotient_cusp_order(eq, c), eq.leading_exponent()) << N;
            }
        }
    }
}

TEST(QSeries, EtaQuotientRejectsBadInput) {
    EXPECT_THROW(EtaQuotient(10, {{3, 1}}), std::invalid_argument);
    const EtaQuotient eq(23, {{1, 2}});
    EXPECT_THROW(eta_quotient_cusp_order(eq, cusps(11).front()), std::invalid_argument);
}

TEST(QSeries, RingOperations) {
    const FracQSeries eta = eta_expansion(50);
    const FracQSeries inv = eta.inverse();
    EXPECT_EQ(inv.offset(), Rational(-1, 24));
    const FracQSeries one = eta * inv;
    EXPECT_EQ(one.offset(), Rational(0));
    EXPECT_EQ(one[0], Rational(1));
    for (std::size_t k = 1; k < one.precision(); ++k) EXPECT_EQ(one[k], Rational(0)) << k;
    // inverse of eta is the partition generating function
    EXPECT_EQ(inv[10], Rational(42));
    EXPECT_EQ(eta.pow(3), eta * eta * eta);
    EXPECT_EQ((eta - eta).coeffs(), std::vector<Rational>(50));
    EXPECT_EQ(eta.scaled(Rational(2)), eta + eta);
}

TEST(QSeries, AdditionAlignsGrids) {
    const FracQSeries a(Rational(0), Rational(1), ints({1, 1, 1, 1}));
    const FracQSeries b(Rational(2), Rational(1), ints({5, 7}));
    const FracQSeries s = a + b;
    EXPECT_EQ(s.offset(), Rational(0));
    EXPECT_EQ(s.coeffs(), ints({1, 1, 6, 8}));
    // truncated at the shorter horizon
    EXPECT_EQ((a + FracQSeries(Rational(1), Rational(1), ints({1}))).precision(), 2u);
    const FracQSeries half(Rational(1, 2), Rational(1), ints({1, 1}));
    EXPECT_THROW(a + half, std::invalid_argument);
}

TEST(QSeries, EvaluateEtaAtI) {
    const double expected = std::tgamma(0.25) / (2.0 * std::pow(std::numbers::pi, 0.75));
    const Evaluation e = evaluate(eta_expansion(40), {0.0, 1.0});
    ASSERT_TRUE(e.bounded());
    EXPECT_NEAR(e.value.real(), expected, 1e-14);
    EXPECT_NEAR(e.value.imag(), 0.0, 1e-14);
    EXPECT_LT(e.error_bound, 1e-13);
    EXPECT_GE(e.error_bound + 1e-15, std::abs(e.value - expected));
}

TEST(QSeries, EvaluateEtaCubedIsCube) {
    const std::complex<double> tau(0.3, 0.7);
    const auto eta = evaluate(eta_expansion(200), tau).value;
    const auto e3 = evaluate(eta_cubed(200), tau).value;
    EXPECT_LT(std::abs(e3 - eta * eta * eta), 1e-12);
}

TEST(QSeries, EvaluationIsMultiplicative) {
    const std::complex<double> tau(-0.2, 0.4);
    const FracQSeries f = eta_expansion(300), g = theta_S(3, 1, 300);
    const auto fg = evaluate(f * g, tau).value;
    EXPECT_LT(std::abs(fg - evaluate(f, tau).value * evaluate(g, tau).value), 1e-10);
}

TEST(QSeries, TailBoundIsHonest) {
    // truncations must lie within their own bound of a deep evaluation
    const std::complex<double> tau(0.1, 0.15);
    const auto deep = evaluate(eta_expansion(4000), tau);
    for (std::size_t P : {20, 40, 80, 160}) {
        const auto e = evaluate(eta_expansion(P), tau);
        if (!e.bounded()) continue;
        EXPECT_LE(std::abs(e.value - deep.value), e.error_bound + deep.error_bound) << P;
    }
}

TEST(QSeries, EvaluateToRaisesPrecision) {
    const SeriesFamily fam = [](std::size_t p) { return eta_expansion(p); };
    const auto e = evaluate_to(fam, {0.0, 0.05}, 1e-11);
    EXPECT_LT(e.error_bound, 1e-11);
    EXPECT_THROW(evaluate(eta_expansion(10), {0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(evaluate_to(fam, {0.0, 1e-7}, 1e-12), InsufficientPrecision);
}

TEST(QSeries, PrecisionBelowOneIsRejected) {
    EXPECT_THROW(eta_expansion(0), std::invalid_argument);
}
