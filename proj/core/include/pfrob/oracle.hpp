#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "pfrob/frobenius_result.hpp"
#include "pfrob/order.hpp"
#include "pfrob/semigroup.hpp"

namespace pfrob {

/// Brute-force reference implementations. Nothing here touches Groebner
/// bases, normal forms or the depth-first factorizer: factorizations are
/// counted by dynamic programming over a dense grid of N^q.

struct OracleBudget {
    std::chrono::milliseconds wall{std::chrono::seconds(60)};
    std::size_t max_cells = 50'000'000;
};

struct OracleReport {
    FrobeniusResult result = FrobeniusResult::infinite();
    /// Largest total degree of a point of the p*Lambda box (p >= 1), or the
    /// last integer examined (p = 0).
    Int scanned_bound = 0;
    std::optional<ExpVec> lambda;
    /// The counted grid is [0, grid_extent] coordinatewise.
    Point grid_extent;
    std::size_t cells = 0;
    std::string certificate;
};

/// F_p(S) from exact factorization counts. For p >= 1 requires finite F_p;
/// for p = 0 requires q = 1 and coprime generators.
OracleReport oracle_fp(const Semigroup& s, Int p, OrderSpec order, const OracleBudget& budget = {});

/// Exact #Z_n(S) for every n with coordinate sum <= degree_bound (zero
/// counts included).
std::map<Point, Int> oracle_counts_up_to(const Semigroup& s, Int degree_bound, const OracleBudget& budget = {});

/// Exact #Z_n(S) for a single element.
Int oracle_count(const Semigroup& s, const Point& n, const OracleBudget& budget = {});

} // namespace pfrob
