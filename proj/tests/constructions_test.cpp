#include <gtest/gtest.h>

#include "critset/constructions.hpp"
#include "critset/criticality.hpp"
#include "critset/solver.hpp"

using namespace critset;

TEST(BackCirculant, SmallOrders) {
    EXPECT_EQ(back_circulant(1), LatinSquare::from_grid(1, {1}));
    EXPECT_EQ(serialize(back_circulant(3)), "3\n1 2 3\n2 3 1\n3 1 2\n");
    EXPECT_EQ(back_circulant(5).at(4, 4), 4);
}

TEST(BackCirculant, ValidAndSymmetricForAllOrders) {
    for (int n = 1; n <= kMaxOrder; ++n) {
        const auto l = back_circulant(n);  // construction validates
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ASSERT_EQ(l.at(i, j), l.at(j, i));
    }
    EXPECT_THROW(back_circulant(0), OrderOutOfRange);
    EXPECT_THROW(back_circulant(32), OrderOutOfRange);
}

TEST(NelderTriangle, SmallOrders) {
    EXPECT_EQ(nelder_triangle(2), PartialLatinSquare::from_triples(2, {{0, 0, 1}}));
    EXPECT_EQ(nelder_triangle(3),
              PartialLatinSquare::from_triples(3, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}}));
    EXPECT_EQ(nelder_triangle(5).size(), 10);
    EXPECT_THROW(nelder_triangle(1), OrderOutOfRange);
    EXPECT_THROW(nelder_triangle(32), OrderOutOfRange);
}

TEST(NelderTriangle, InsideBackCirculantWithTriangularSize) {
    for (int n = 2; n <= kMaxOrder; ++n) {
        const auto t = nelder_triangle(n);
        EXPECT_EQ(t.size(), n * (n - 1) / 2);
        EXPECT_TRUE(t.subset_of(back_circulant(n).as_partial()));
    }
}

TEST(NelderTriangle, CriticalUpToOrderEight) {
    for (int n = 2; n <= 8; ++n) {
        const auto report = verify_critical(nelder_triangle(n));
        EXPECT_TRUE(report.critical()) << n;
        EXPECT_EQ(*report.completion, back_circulant(n));
    }
}

TEST(FiveByFiveExample, Shape) {
    const auto p = paper_example();
    EXPECT_EQ(p.size(), 11);
    const std::vector<Triple> expected{{0, 0, 2}, {0, 2, 4}, {0, 3, 3}, {1, 2, 1}, {1, 3, 2}, {2, 1, 2},
                                       {2, 2, 3}, {2, 3, 1}, {3, 0, 3}, {3, 1, 1}, {3, 2, 2}};
    EXPECT_EQ(p.triples(), expected);
}

TEST(AllButFirstRowCol, SmallCases) {
    const auto one = all_but_first_row_col(LatinSquare::from_grid(1, {1}));
    EXPECT_EQ(one.size(), 0);
    EXPECT_TRUE(is_uniquely_completable(one));

    const auto two = all_but_first_row_col(LatinSquare::from_grid(2, {1, 2, 2, 1}));
    EXPECT_EQ(two, PartialLatinSquare::from_triples(2, {{1, 1, 1}}));
    EXPECT_TRUE(is_uniquely_completable(two));

    const auto five = all_but_first_row_col(back_circulant(5));
    EXPECT_EQ(five.size(), 16);
    EXPECT_TRUE(is_uniquely_completable(five));
}

TEST(AllButFirstRowCol, UniquelyCompletableOnRandomSuite) {
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 6;
        const auto l = random_latin_square(n, static_cast<std::uint64_t>(i));
        const auto p = all_but_first_row_col(l);
        EXPECT_EQ(p.size(), (n - 1) * (n - 1));
        EXPECT_EQ(unique_completion(p), l) << serialize(l);
    }
}

TEST(RandomLatinSquare, SeededAndReproducible) {
    EXPECT_EQ(random_latin_square(8, 42), random_latin_square(8, 42));
    EXPECT_NE(random_latin_square(8, 42), random_latin_square(8, 43));
    EXPECT_EQ(random_latin_square(12, 5).order(), 12);
}
