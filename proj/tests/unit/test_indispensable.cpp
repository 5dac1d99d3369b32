#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace pfrob;
using namespace pfrob::testing;

TEST(Nabla, Components) {
    const Semigroup s = numerical({2, 3});
    const auto six = nabla_components(s, Point{6});
    ASSERT_EQ(six.size(), 2u);
    EXPECT_EQ(six[0], std::vector<ExpVec>{ExpVec({3, 0})});
    EXPECT_EQ(six[1], std::vector<ExpVec>{ExpVec({0, 2})});
    const auto twelve = nabla_components(s, Point{12});
    ASSERT_EQ(twelve.size(), 1u);
    EXPECT_EQ(twelve[0].size(), 3u);
    const auto single = nabla_components(planar_example(), Point{21, 4});
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0], std::vector<ExpVec>{ExpVec({3, 2, 0, 0, 4})});
    EXPECT_TRUE(nabla_components(s, Point{1}).empty());
}

TEST(MinimalBasis, Verification) {
    const Semigroup s23 = numerical({2, 3});
    const std::vector<Binomial> one{{{3, 0}, {0, 2}}};
    EXPECT_TRUE(verify_minimal_ideal_basis(s23, one));
    const std::vector<Binomial> redundant{{{3, 0}, {0, 2}}, {{6, 0}, {0, 4}}};
    EXPECT_FALSE(verify_minimal_ideal_basis(s23, redundant));
    EXPECT_FALSE(verify_minimal_ideal_basis(s23, {}));

    const Semigroup s345 = numerical({3, 4, 5});
    const std::vector<Binomial> standard{{{0, 2, 0}, {1, 0, 1}}, {{3, 0, 0}, {0, 1, 1}}, {{0, 0, 2}, {2, 1, 0}}};
    EXPECT_TRUE(verify_minimal_ideal_basis(s345, standard));
    // Right count per degree but does not generate the ideal.
    const std::vector<Binomial> missing{{{0, 2, 0}, {1, 0, 1}}, {{3, 0, 0}, {0, 1, 1}}};
    EXPECT_FALSE(verify_minimal_ideal_basis(s345, missing));
    // Non-homogeneous input is rejected.
    const std::vector<Binomial> bad{{{1, 0}, {0, 1}}};
    EXPECT_THROW(verify_minimal_ideal_basis(s23, bad), Error);
}

TEST(Indispensable, SmallNumerical) {
    EXPECT_EQ(indispensable_binomials(numerical({2, 3})), (std::vector<Binomial>{{{3, 0}, {0, 2}}}));
    const auto found = indispensable_binomials(numerical({3, 4, 5}));
    ASSERT_EQ(found.size(), 3u);
    std::vector<Int> degrees;
    for (const Binomial& b : found) degrees.push_back(s_degree(numerical({3, 4, 5}), b.lead)[0]);
    std::sort(degrees.begin(), degrees.end());
    EXPECT_EQ(degrees, (std::vector<Int>{8, 9, 10}));
}

TEST(Indispensable, PlanarExample) {
    // Five reduced-basis degrees, (8,20), (6,20), (4,25), (6,12) and (9,6),
    // carry more than two factorizations.
    const Semigroup s = planar_example();
    const auto found = indispensable_binomials(s, grlex);
    EXPECT_EQ(found.size(), 9u);
    EXPECT_EQ(factorizations(s, Point{8, 20}).size(), 5u);
    EXPECT_EQ(factorizations(s, Point{9, 6}).size(), 3u);
    for (const Binomial& b : found) {
        const auto comps = nabla_components(s, s_degree(s, b.lead));
        EXPECT_EQ(comps.size(), 2u);
        EXPECT_EQ(comps[0].size() + comps[1].size(), 2u);
    }
}

TEST(Indispensable, NoIndispensableMeansNoTwoFactorizationElements) {
    // Without indispensable binomials, no element of the 2*Lambda box has exactly two factorizations.
    Rng rng(606);
    for (int trial = 0; trial < 12; ++trial) {
        const Semigroup s = trial % 2 ? random_finite_semigroup_2d(rng, 4, 5) : random_numerical_semigroup(rng, 4, 12);
        const bool none = indispensable_binomials(s, grlex).empty();
        const GroebnerBasis g = reduced_groebner_basis(s, grlex);
        bool some_two = false;
        for (const Point& m : candidate_degrees(s, lambda_bounds(s, g), 2))
            if (count_capped(s, m, 3) == 2) some_two = true;
        if (some_two) EXPECT_FALSE(none);
        if (none) EXPECT_EQ(f2_improved(s, grlex), f1_staircase(s, grlex));
    }
}

TEST(Indispensable, ReducedBasisIsMinimalWhenAllAreIndispensable) {
    Rng rng(515);
    for (int trial = 0; trial < 12; ++trial) {
        const Semigroup s = random_numerical_semigroup(rng, 3, 14);
        const GroebnerBasis g = reduced_groebner_basis(s, grlex);
        const auto found = indispensable_binomials(s, grlex);
        if (found.size() == g.size()) EXPECT_TRUE(verify_minimal_ideal_basis(s, g.elements()));
    }
}
