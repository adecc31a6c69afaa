#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "critset/bounds.hpp"
#include "critset/core.hpp"
#include "critset/enumeration.hpp"

using namespace critset;

namespace {

double as_double(const BigInt& b) { return b.convert_to<double>(); }

// ln(n!) through lgamma, independent of the summation used by the library.
double lgamma_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

TEST(CountingLowerBound, CrossoverNeighbourhood) {
    const double at195 = theorem1_lower(195);
    const double at194 = theorem1_lower(194);
    EXPECT_NEAR(at195, 18918.1017, 1e-3);
    EXPECT_NEAR(at194, 18707.5240, 1e-3);
    EXPECT_GT(at195, as_double(nelder_bound(195)));
    EXPECT_LT(at194, as_double(nelder_bound(194)));
}

TEST(CountingLowerBound, WeakAtSmallOrders) {
    EXPECT_NEAR(theorem1_lower(6), -1.7009, 1e-3);
    EXPECT_LT(theorem1_lower(6), 18.0);
}

TEST(CountingLowerBound, UndefinedBelowTwo) {
    EXPECT_THROW(theorem1_lower(1), Error);
    EXPECT_THROW(theorem1_lower_proof_form(0), Error);
    EXPECT_THROW(exact_counting_lower(1), Error);
}

TEST(CountingLowerBound, FormsAgree) {
    for (std::int64_t n = 2; n <= 100000; ++n) {
        const double a = theorem1_lower(n);
        const double b = theorem1_lower_proof_form(n);
        ASSERT_LE(std::abs(a - b), 1e-9 * std::max(1.0, std::abs(a))) << n;
    }
}

TEST(CountingLowerBound, MatchesLogSpaceFinalInequality) {
    // n ln(2 pi) + (n^2+n) ln n - 2n^2 - (n^2-2n+1) ln 2 <= lcs ln n, solved for lcs.
    for (std::int64_t n : {2, 3, 10, 195, 1000}) {
        const double x = static_cast<double>(n);
        const double lhs = x * std::log(2 * std::numbers::pi) + (x * x + x) * std::log(x) -
                           2 * x * x - (x * x - 2 * x + 1) * std::log(2.0);
        EXPECT_NEAR(lhs / std::log(x), theorem1_lower(n), 1e-9 * std::max(1.0, std::abs(lhs)));
    }
}

TEST(IntegerBounds, Nelder) {
    EXPECT_EQ(nelder_bound(1), 0);
    EXPECT_EQ(nelder_bound(5), 10);
    EXPECT_EQ(nelder_bound(195), 18915);
    EXPECT_EQ(nelder_bound(4'000'000'000LL), BigInt("7999999998000000000"));
}

TEST(IntegerBounds, BeanMahmoodian) {
    EXPECT_EQ(bm_upper(1), 1);
    EXPECT_EQ(bm_upper(4), 7);
    EXPECT_EQ(bm_upper(5), 13);
}

TEST(IntegerBounds, StinsonVanRees) {
    EXPECT_EQ(svr_bound(1), 1);
    EXPECT_EQ(svr_bound(2), 7);
    EXPECT_EQ(svr_bound(3), 37);
    EXPECT_EQ(svr_bound(3), kKnownLcsLowerBounds[1]);  // n = 8
    EXPECT_EQ(svr_bound(40), BigInt("1208925819614629174706176") - BigInt("12157665459056928801"));
    EXPECT_THROW(svr_bound(0), Error);
}

TEST(IntegerBounds, NelderBelowBmUpper) {
    for (std::int64_t n = 3; n <= 2000; ++n) EXPECT_GE(bm_upper(n), nelder_bound(n)) << n;
}

TEST(LogFactorial, AgreesWithLgamma) {
    for (int n = 0; n <= 300; ++n) EXPECT_NEAR(log_factorial(n), lgamma_factorial(n), 1e-9 * (1 + n));
}

TEST(LogLnLower, Values) {
    EXPECT_EQ(log_Ln_lower(1), 0.0);
    EXPECT_NEAR(log_Ln_lower(2), 0.0, 1e-12);
    EXPECT_NEAR(log_Ln_lower(5), 10 * std::log(120.0) - 25 * std::log(5.0), 1e-9);
    EXPECT_NEAR(log_Ln_lower(5), 7.6390, 1e-4);
    EXPECT_LE(log_Ln_lower(5), std::log(161280.0));
}

TEST(CheckChain, Examples) {
    const auto four = check_chain(4, 7);
    EXPECT_TRUE(four.holds);
    EXPECT_NEAR(four.mid_log, std::log(576.0), 1e-12);

    const auto five = check_chain(5, 11);
    EXPECT_TRUE(five.holds);
    EXPECT_NEAR(five.lhs_log, 7.6390, 1e-4);
    EXPECT_NEAR(five.mid_log, 11.9909, 1e-4);
    EXPECT_NEAR(five.rhs_log, 28.7942, 1e-4);

    const auto one = check_chain(1, 0);
    EXPECT_TRUE(one.holds);
    EXPECT_EQ(one.lhs_log, 0.0);
    EXPECT_EQ(one.mid_log, 0.0);
    EXPECT_EQ(one.rhs_log, 0.0);

    EXPECT_THROW(check_chain(6, 18), OrderOutOfRange);
}

TEST(CheckChain, FailsWithTooSmallLcs) {
    // 9 ln 2 < ln 576.
    EXPECT_FALSE(check_chain(4, 0).holds);
}

TEST(Stirling, Range) {
    EXPECT_TRUE(stirling_check(1));
    EXPECT_NEAR(0.5 * std::log(2 * std::numbers::pi) - 1.0, -0.0811, 1e-4);
    EXPECT_TRUE(stirling_check(10));
    EXPECT_TRUE(stirling_check(300));
    EXPECT_THROW(stirling_check(0), Error);
    EXPECT_THROW(stirling_check(301), Error);
}

TEST(Crossover, Is195) {
    EXPECT_EQ(crossover(), 195);
}

TEST(Dominance, ExactCountingBoundAboveStirlingForm) {
    for (std::int64_t n = 2; n <= 10000; ++n) {
        ASSERT_GE(exact_counting_lower(n), theorem1_lower(n)) << n;
    }
}

TEST(Dominance, SvrBeatsCountingBound) {
    for (int m = 2; m <= 20; ++m) {
        EXPECT_GT(as_double(svr_bound(m)), theorem1_lower(std::int64_t{1} << m)) << m;
    }
}

TEST(Fixtures, KnownLcsWithinBounds) {
    for (int n = 2; n <= 6; ++n) {
        const int v = *known_lcs(n);
        EXPECT_LE(theorem1_lower(n), v);
        EXPECT_LE(nelder_bound(n), v);
        EXPECT_LE(v, bm_upper(n));
    }
    EXPECT_EQ(*known_lcs(1), 0);
    EXPECT_FALSE(known_lcs(7));
    for (int n = 7; n <= 10; ++n) {
        EXPECT_LE(nelder_bound(n), kKnownLcsLowerBounds[static_cast<std::size_t>(n - 7)]);
        EXPECT_LE(kKnownLcsLowerBounds[static_cast<std::size_t>(n - 7)], bm_upper(n));
    }
}

TEST(BoundsTable, Rows) {
    const auto four = bounds_table(4, 4);
    ASSERT_EQ(four.size(), 1u);
    EXPECT_EQ(four[0].nelder, 6);
    EXPECT_EQ(four[0].bm_upper, 7);
    ASSERT_TRUE(four[0].svr);
    EXPECT_EQ(*four[0].svr, 7);
    EXPECT_NEAR(four[0].log_cs_count_upper_coeffs.first, 9 * std::log(2.0), 1e-12);
    EXPECT_NEAR(four[0].log_cs_count_upper_coeffs.second, std::log(4.0), 1e-12);

    const auto two = bounds_table(2, 2);
    EXPECT_EQ(two[0].nelder, 1);

    const auto big = bounds_table(195, 195);
    EXPECT_GT(*big[0].theorem1, as_double(big[0].nelder));
    EXPECT_FALSE(big[0].svr);

    const auto one = bounds_table(1, 3);
    ASSERT_EQ(one.size(), 3u);
    EXPECT_FALSE(one[0].theorem1);
    EXPECT_TRUE(one[1].theorem1);

    for (const auto& r : bounds_table(2, 300)) {
        EXPECT_GE(*r.exact_counting_lower, *r.theorem1);
    }
    EXPECT_THROW(bounds_table(5, 4), Error);
    EXPECT_THROW(bounds_table(0, 4), Error);
}
