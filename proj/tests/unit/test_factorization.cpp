#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace pfrob;
using namespace pfrob::testing;

TEST(Factorization, SmallNumerical) {
    const Semigroup s = numerical({2, 3});
    const FactorizationSet z = factorizations(s, Point{12});
    EXPECT_EQ(z.factorizations(), (std::vector<ExpVec>{{6, 0}, {3, 2}, {0, 4}}));
    EXPECT_TRUE(factorizations(s, Point{1}).empty());
    EXPECT_EQ(count_capped(s, Point{12}, 2), 2u);
    EXPECT_EQ(count_capped(s, Point{0}, 5), 1u);
    EXPECT_TRUE(contains(s, Point{5}));
    EXPECT_FALSE(contains(s, Point{1}));
}

TEST(Factorization, PlanarExample) {
    const Semigroup s = planar_example();
    EXPECT_EQ(factorizations(s, Point{21, 4}).factorizations(), (std::vector<ExpVec>{{3, 2, 0, 0, 4}}));
    EXPECT_EQ(count_capped(s, Point{21, 4}, 2), 1u);
    EXPECT_TRUE(contains(s, Point{2, 83}));
    EXPECT_EQ(factorizations(s, Point{2, 83}).size(), 3u);
    EXPECT_EQ(factorizations(s, Point{2, 51}).factorizations(), (std::vector<ExpVec>{{0, 0, 5, 4, 2}}));
}

TEST(Factorization, RejectsBadElements) {
    const Semigroup s = numerical({2, 3});
    EXPECT_THROW(factorizations(s, Point{-1}), Error);
    EXPECT_THROW(factorizations(s, Point{1, 1}), Error);
    EXPECT_THROW(count_capped(s, Point{4}, 0), Error);
}

TEST(Factorization, EarlyStop) {
    const Semigroup s = numerical({2, 3});
    int seen = 0;
    for_each_factorization(s.generators(), Point{30}, [&](const ExpVec&) { return ++seen < 2; });
    EXPECT_EQ(seen, 2);
}

TEST(Factorization, AgreesWithNaiveEnumerator) {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t q = static_cast<std::size_t>(uniform(rng, 1, 2));
        const std::size_t h = static_cast<std::size_t>(uniform(rng, 1, 5));
        const Semigroup s = random_semigroup(rng, q, h, 12);
        for (int k = 0; k < 6; ++k) {
            const Point n = s_degree(s, random_exponents(rng, s.size(), 3)) + random_point(rng, q, 2);
            const std::vector<ExpVec> expected = naive_factorizations(s.generators(), n);
            const FactorizationSet z = factorizations(s, n);
            EXPECT_EQ(z.factorizations(), expected) << "n = " << to_string(n);
            EXPECT_EQ(contains(s, n), !expected.empty());
            EXPECT_EQ(count_capped(s, n, 3), std::min<std::size_t>(3, expected.size()));
            for (const ExpVec& lambda : z) EXPECT_EQ(s_degree(s, lambda), n);
        }
    }
}
