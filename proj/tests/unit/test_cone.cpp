#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace pfrob;
using namespace pfrob::testing;

namespace {

std::vector<Point> directions(const Semigroup& s) {
    std::vector<Point> out;
    for (const RayDirection& d : extremal_ray_directions(s)) out.push_back(d.point());
    return out;
}

} // namespace

TEST(Cone, PrimitiveDirection) {
    EXPECT_EQ(primitive_direction(Point{4, 0}).point(), (Point{1, 0}));
    EXPECT_EQ(primitive_direction(Point{6, 4}).point(), (Point{3, 2}));
    EXPECT_EQ(primitive_direction(Point{0, 7}).point(), (Point{0, 1}));
    EXPECT_THROW(primitive_direction(Point{0, 0}), Error);
    EXPECT_THROW(primitive_direction(Point{1, -1}), Error);
}

TEST(Cone, RationalConeMembership) {
    const std::vector<Point> rays{{1, 0}, {1, 2}};
    EXPECT_TRUE(in_rational_cone(rays, Point{3, 1}));
    EXPECT_TRUE(in_rational_cone(rays, Point{1, 2}));
    EXPECT_FALSE(in_rational_cone(rays, Point{1, 3}));
    EXPECT_FALSE(in_rational_cone(rays, Point{0, 1}));
    const std::vector<Point> spatial{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
    EXPECT_TRUE(in_rational_cone(spatial, Point{1, 2, 1}));
    EXPECT_FALSE(in_rational_cone(spatial, Point{0, 0, 1}));
}

TEST(Cone, ExtremalRays) {
    EXPECT_EQ(directions(planar_example()), (std::vector<Point>{{0, 1}, {1, 0}}));
    EXPECT_EQ(directions(ray_deficient()), (std::vector<Point>{{0, 1}, {1, 0}}));
    EXPECT_EQ(directions(make({{1, 1}})), (std::vector<Point>{{1, 1}}));
    // (1,1,1) lies inside the cone of the three others.
    EXPECT_EQ(directions(make({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})),
              (std::vector<Point>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Cone, Finiteness) {
    EXPECT_TRUE(is_fp_finite(planar_example()));
    EXPECT_FALSE(is_fp_finite(ray_deficient()));
    EXPECT_TRUE(is_fp_finite(numerical({2, 3})));
    EXPECT_FALSE(is_fp_finite(numerical({2})));
    EXPECT_FALSE(is_fp_finite(make({{1, 1}})));
    EXPECT_TRUE(is_fp_finite(make({{2, 0}, {3, 0}, {0, 2}, {0, 3}})));
}

TEST(Cone, FinitenessMatchesBruteForceInThePlane) {
    // In dimension 2 the extremal rays are the two angular extremes.
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Semigroup s = random_semigroup(rng, 2, 5, 6);
        const auto angle_less = [](const Point& a, const Point& b) { return a[1] * b[0] < b[1] * a[0]; };
        const auto& g = s.generators();
        const Point lo = *std::min_element(g.begin(), g.end(), angle_less);
        const Point hi = *std::max_element(g.begin(), g.end(), angle_less);
        const auto on = [&](const Point& d) {
            return std::count_if(g.begin(), g.end(), [&](const Point& x) { return x[1] * d[0] == d[1] * x[0]; });
        };
        EXPECT_EQ(is_fp_finite(s), on(lo) >= 2 && on(hi) >= 2);
    }
}

TEST(Cone, VerdictIndependentOfPAndOrder) {
    Rng rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        const Semigroup s = trial % 2 ? random_semigroup(rng, 2, 4, 5) : random_finite_semigroup_2d(rng, 4, 5);
        const bool finite = is_fp_finite(s);
        for (const OrderSpec order : {grlex, grevlex})
            for (Int p = 1; p <= 3; ++p) EXPECT_EQ(fp_general(s, p, order).is_finite(), finite);
    }
}
