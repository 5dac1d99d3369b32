#pragma once

#include <initializer_list>
#include <vector>

#include "pfrob/pfrob.hpp"

namespace pfrob::testing {

inline Semigroup make(std::initializer_list<Point> gens) { return Semigroup(std::vector<Point>(gens)); }

inline Semigroup numerical(std::initializer_list<Int> gens) {
    std::vector<Point> pts;
    for (Int g : gens) pts.push_back(Point{g});
    return Semigroup(std::move(pts));
}

/// <(3,0),(4,0),(0,5),(0,6),(1,1)>, the running two-dimensional example.
inline Semigroup planar_example() { return make({{3, 0}, {4, 0}, {0, 5}, {0, 6}, {1, 1}}); }

/// <(0,1),(1,1),(2,0),(3,0)>: the ray through (0,1) holds a single generator.
inline Semigroup ray_deficient() { return make({{0, 1}, {1, 1}, {2, 0}, {3, 0}}); }

inline const OrderSpec grlex{OrderKind::GradedLex};
inline const OrderSpec grevlex{OrderKind::GradedRevLex};

} // namespace pfrob::testing
