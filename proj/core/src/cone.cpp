#include "pfrob/cone.hpp"

#include <algorithm>
#include <set>

namespace pfrob {
namespace {

// One inequality  coeffs . mu <= rhs  over rational unknowns mu.
struct Row {
    std::vector<Int> coeffs;
    Int rhs = 0;

    friend auto operator<=>(const Row&, const Row&) = default;
};

// Dividing by the gcd of all entries (rhs included) keeps the rational
// solution set unchanged.
void normalize(Row& row) {
    Int g = gcd_abs(row.rhs, 0);
    for (Int c : row.coeffs) g = gcd_abs(g, c);
    if (g > 1) {
        for (Int& c : row.coeffs) c /= g;
        row.rhs /= g;
    }
}

// Fourier-Motzkin: eliminate every unknown, then check 0 <= rhs.
bool feasible(std::set<Row> rows, std::size_t unknowns) {
    for (std::size_t var = 0; var < unknowns; ++var) {
        std::vector<Row> pos, neg;
        std::set<Row> next;
        for (const Row& r : rows) {
            if (r.coeffs[var] > 0) pos.push_back(r);
            else if (r.coeffs[var] < 0) neg.push_back(r);
            else next.insert(r);
        }
        for (const Row& p : pos) {
            for (const Row& n : neg) {
                const Int mp = checked_sub(0, n.coeffs[var]);
                const Int mn = p.coeffs[var];
                Row combined;
                combined.coeffs.resize(unknowns);
                for (std::size_t i = 0; i < unknowns; ++i)
                    combined.coeffs[i] = checked_add(checked_mul(mp, p.coeffs[i]), checked_mul(mn, n.coeffs[i]));
                combined.rhs = checked_add(checked_mul(mp, p.rhs), checked_mul(mn, n.rhs));
                normalize(combined);
                next.insert(std::move(combined));
            }
        }
        rows = std::move(next);
    }
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.rhs >= 0; });
}

} // namespace

RayDirection::RayDirection(const Point& v) : dir_(v) {
    require(v.is_non_negative(), "ray direction " + to_string(v) + " has a negative coordinate");
    require(!v.is_zero(), "the zero vector has no direction");
    Int g = 0;
    for (Int x : v) g = gcd_abs(g, x);
    for (Int& x : dir_) x /= g;
}

RayDirection primitive_direction(const Point& v) { return RayDirection(v); }

bool in_rational_cone(std::span<const Point> rays, const Point& target) {
    const std::size_t m = rays.size();
    const std::size_t q = target.size();
    std::set<Row> rows;
    for (std::size_t j = 0; j < q; ++j) {
        Row upper, lower;
        upper.coeffs.resize(m);
        lower.coeffs.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            require(rays[i].size() == q, "ray dimension mismatch");
            upper.coeffs[i] = rays[i][j];
            lower.coeffs[i] = -rays[i][j];
        }
        upper.rhs = target[j];
        lower.rhs = -target[j];
        normalize(upper);
        normalize(lower);
        rows.insert(std::move(upper));
        rows.insert(std::move(lower));
    }
    for (std::size_t i = 0; i < m; ++i) {
        Row nonneg;
        nonneg.coeffs.assign(m, 0);
        nonneg.coeffs[i] = -1;
        rows.insert(std::move(nonneg));
    }
    return feasible(std::move(rows), m);
}

std::vector<RayDirection> extremal_ray_directions(const Semigroup& s) {
    std::vector<RayDirection> dirs;
    for (const Point& g : s.generators()) dirs.emplace_back(g);
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    if (s.dim() == 1 || dirs.size() == 1) return dirs;

    std::vector<RayDirection> extremal;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < dirs.size(); ++j)
            if (j != i) others.push_back(dirs[j].point());
        if (!in_rational_cone(others, dirs[i].point())) extremal.push_back(dirs[i]);
    }
    return extremal;
}

bool is_fp_finite(const Semigroup& s) {
    if (s.dim() == 1) return s.size() >= 2;
    for (const RayDirection& ray : extremal_ray_directions(s)) {
        const auto on_ray = std::count_if(s.generators().begin(), s.generators().end(),
                                          [&](const Point& g) { return RayDirection(g) == ray; });
        if (on_ray < 2) return false;
    }
    return true;
}

} // namespace pfrob
