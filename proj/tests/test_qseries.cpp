#include "urodlab/qseries.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace urodlab;

namespace {

// Partition counts by direct recursion over the largest part.
long partitions_bounded(long n, long max_part) {
    if (n == 0) return 1;
    long total = 0;
    for (long k = 1; k <= std::min(n, max_part); ++k) total += partitions_bounded(n - k, k);
    return total;
}

QSeries from_ints(const std::vector<long>& c, const Rational& offset, long denom, const Rational& order) {
    QSeries s(order, offset, denom);
    for (std::size_t i = 0; i < c.size(); ++i) s.add_term(c[i], offset + frac(static_cast<long>(i), denom));
    return s;
}

} // namespace

TEST(QSeries, EtaInversePower) {
    auto p = eta_inverse_power(1, 5);
    std::vector<Rational> want{1, 1, 2, 3, 5};
    EXPECT_EQ(p.coeffs(), want);
    for (long n = 0; n < 15; ++n) EXPECT_EQ(eta_inverse_power(1, 15).coefficient(n), partitions_bounded(n, n));
    EXPECT_EQ(eta_inverse_power(0, 6).terms().size(), 1u);
    auto p2 = eta_inverse_power(2, 4);
    std::vector<Rational> want2{1, 2, 5, 10};
    EXPECT_EQ(p2.coeffs(), want2);
    // convolution oracle for r = 2
    for (long n = 0; n < 12; ++n) {
        long conv = 0;
        for (long j = 0; j <= n; ++j) conv += partitions_bounded(j, j) * partitions_bounded(n - j, n - j);
        EXPECT_EQ(eta_inverse_power(2, 12).coefficient(n), conv);
    }
    EXPECT_THROW(eta_inverse_power(-1, 3), DomainError);
}

TEST(QSeries, TruncationOrder) {
    QSeries a = from_ints({1, 2, 3}, 0, 1, 3);
    QSeries b = from_ints({1, 1}, Rational(1, 2), 1, Rational(5, 2));
    auto c = a * b;
    // exact below min(3 + 1/2, 5/2 + 0)
    EXPECT_EQ(c.order(), Rational(5, 2));
    EXPECT_EQ(c.coefficient(Rational(1, 2)), 1);
    EXPECT_EQ(c.coefficient(Rational(3, 2)), 3);
    EXPECT_THROW(c.coefficient(Rational(5, 2)), DomainError);
    auto s = a + b;
    EXPECT_EQ(s.order(), Rational(5, 2));
    EXPECT_EQ(s.coefficient(0), 1);
    EXPECT_EQ(s.coefficient(Rational(1, 2)), 1);
    EXPECT_EQ(s.denom(), 2);
    auto sh = a.shifted(Rational(-1, 4));
    EXPECT_EQ(sh.lowest_exponent(), Rational(-1, 4));
    EXPECT_EQ(sh.order(), Rational(11, 4));
}

TEST(QSeries, MultiplicationMatchesConvolutionOracle) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        long d = 1 + trial % 3;
        std::vector<long> x(12), y(12);
        for (auto& v : x) v = coef(rng);
        for (auto& v : y) v = coef(rng);
        Rational ox = frac(trial % 5 - 2, d), oy = frac(trial % 7 - 3, 2 * d);
        Rational N = 4;
        auto a = from_ints(x, ox, d, N);
        auto b = from_ints(y, oy, 2 * d, N);
        auto c = a * b;
        // oracle: map exponent -> coefficient
        std::map<Rational, long> oracle;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Rational ei = ox + frac(static_cast<long>(i), d);
            if (ei >= N) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                Rational ej = oy + frac(static_cast<long>(j), 2 * d);
                if (ej >= N) continue;
                oracle[ei + ej] += x[i] * y[j];
            }
        }
        for (const auto& [e, v] : oracle) {
            if (e < c.order()) {
                EXPECT_EQ(c.coefficient(e), v) << "trial " << trial;
            }
        }
        for (const auto& [e, v] : c.terms()) EXPECT_EQ(oracle[e], v);
        // commutativity and associativity up to tracked order
        auto c2 = b * a;
        EXPECT_FALSE(first_difference(c, c2, c.order()).has_value());
        auto z = from_ints({1, -1, 2}, 0, 1, N);
        auto l = (a * b) * z, r = a * (b * z);
        EXPECT_EQ(l.order(), r.order());
        EXPECT_FALSE(first_difference(l, r, l.order()).has_value());
    }
}

TEST(QSeries, FirstDifference) {
    QSeries a = from_ints({2, 2, 6}, 0, 1, 3);
    QSeries b = from_ints({2, 2, 6}, 0, 1, 3);
    EXPECT_FALSE(first_difference(a, b, 3).has_value());
    b.add_term(1, 1);
    EXPECT_EQ(first_difference(a, b, 3), Rational(1));
    EXPECT_THROW(first_difference(a, b, 4), DomainError);
    EXPECT_EQ(a.head(2), (std::vector<std::string>{"2", "2"}));
    // heads step by whole powers of q even on a finer grid
    QSeries c(3, 0, 2);
    c.add_term(1, 0);
    c.add_term(5, Rational(1, 2));
    c.add_term(3, 1);
    EXPECT_EQ(c.head(5), (std::vector<std::string>{"1", "3", "0"}));
}
