#pragma once

// Hand-rolled random generators and a naive factorization enumerator shared by
// the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "pfrob/pfrob.hpp"

namespace pfrob::testing {

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline Point random_point(Rng& rng, std::size_t q, Int max_coord) {
    Point p(q);
    for (std::size_t i = 0; i < q; ++i) p[i] = uniform(rng, 0, max_coord);
    return p;
}

inline ExpVec random_exponents(Rng& rng, std::size_t h, Int max_exp) {
    ExpVec e(h);
    for (std::size_t i = 0; i < h; ++i) e[i] = uniform(rng, 0, max_exp);
    return e;
}

/// Minimal generating set of a semigroup with up to h generators, nonzero
/// coordinates at most max_coord. Not necessarily of finite F_p.
inline Semigroup random_semigroup(Rng& rng, std::size_t q, std::size_t h, Int max_coord) {
    while (true) {
        std::vector<Point> gens;
        for (std::size_t i = 0; i < h; ++i) {
            Point g = random_point(rng, q, max_coord);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (!gens.empty()) return minimalize_generators(std::move(gens));
    }
}

/// Numerical semigroup (gcd 1) with between 2 and h minimal generators in [2, max_gen].
inline Semigroup random_numerical_semigroup(Rng& rng, std::size_t h, Int max_gen) {
    while (true) {
        std::vector<Point> gens;
        Int g = 0;
        for (std::size_t i = 0; i < h; ++i) {
            const Int a = uniform(rng, 2, max_gen);
            gens.push_back(Point{a});
            g = std::gcd(g, a);
        }
        if (g != 1) continue;
        Semigroup s = minimalize_generators(std::move(gens));
        if (s.size() >= 2) return s;
    }
}

/// Semigroup in N^2 whose F_p is finite: every extremal ray carries two generators.
inline Semigroup random_finite_semigroup_2d(Rng& rng, std::size_t h, Int max_coord) {
    while (true) {
        Semigroup s = random_semigroup(rng, 2, h, max_coord);
        if (s.size() >= 2 && is_fp_finite(s)) return s;
    }
}

/// Valid gluing data for S: gamma a non-generator element of S (a sum of two or
/// three generators), gcd(d, gcd(gamma)) = 1.
inline std::optional<GluingSpec> random_gluing(Rng& rng, const Semigroup& s, Int d) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        ExpVec lambda(s.size());
        const Int parts = uniform(rng, 2, 3);
        for (Int k = 0; k < parts; ++k) ++lambda[static_cast<std::size_t>(uniform(rng, 0, Int(s.size()) - 1))];
        GluingSpec spec{d, s_degree(s, lambda)};
        try {
            validate_gluing(s, spec);
            return spec;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

/// Every lambda with sum lambda_i a_i = n, by an odometer over the box
/// lambda_i <= min_j n_j / a_ij. Sorted lexicographically decreasing.
inline std::vector<ExpVec> naive_factorizations(const std::vector<Point>& gens, const Point& n) {
    const std::size_t h = gens.size();
    ExpVec upper(h);
    for (std::size_t i = 0; i < h; ++i) {
        Int bound = -1;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (gens[i][j] > 0) bound = bound < 0 ? n[j] / gens[i][j] : std::min(bound, n[j] / gens[i][j]);
        upper[i] = bound;
    }
    std::vector<ExpVec> out;
    ExpVec lambda(h);
    while (true) {
        Point sum(n.size());
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < n.size(); ++j) sum[j] += lambda[i] * gens[i][j];
        if (sum == n) out.push_back(lambda);
        std::size_t i = 0;
        for (; i < h; ++i) {
            if (lambda[i] < upper[i]) {
                ++lambda[i];
                break;
            }
            lambda[i] = 0;
        }
        if (i == h) break;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace pfrob::testing
