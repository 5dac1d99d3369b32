#pragma once

#include <span>
#include <vector>

#include "pfrob/semigroup.hpp"

namespace pfrob {

/// A non-zero point whose coordinates have gcd 1.
class RayDirection {
public:
    explicit RayDirection(const Point& v);

    const Point& point() const noexcept { return dir_; }

    friend bool operator==(const RayDirection&, const RayDirection&) = default;
    friend auto operator<=>(const RayDirection&, const RayDirection&) = default;

private:
    Point dir_;
};

RayDirection primitive_direction(const Point& v);

/// Whether target is a non-negative rational combination of rays, decided
/// exactly by Fourier-Motzkin elimination.
bool in_rational_cone(std::span<const Point> rays, const Point& target);

/// Primitive directions of the extremal rays of the cone spanned by S,
/// sorted lexicographically.
std::vector<RayDirection> extremal_ray_directions(const Semigroup& s);

/// True iff every extremal ray carries at least two minimal generators,
/// which is exactly when F_p(S) is finite for every p >= 1.
bool is_fp_finite(const Semigroup& s);

} // namespace pfrob
