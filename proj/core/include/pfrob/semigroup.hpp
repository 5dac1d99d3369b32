#pragma once

#include <cstddef>
#include <vector>

#include "pfrob/vec.hpp"

namespace pfrob {

/// An affine semigroup S = <a_1, ..., a_h> of N^q, stored by its minimal
/// generating set. The generator order fixes the variable order
/// x_1 > x_2 > ... > x_h of the semigroup ring.
class Semigroup {
public:
    /// Validates the list: non-empty, common dimension q >= 1, non-negative,
    /// no zero vector, pairwise distinct, and minimal. Throws Validation
    /// otherwise; use minimalize_generators() for arbitrary input.
    explicit Semigroup(std::vector<Point> generators);

    std::size_t dim() const noexcept { return q_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const std::vector<Point>& generators() const noexcept { return gens_; }
    const Point& generator(std::size_t i) const { return gens_.at(i); }

    friend bool operator==(const Semigroup&, const Semigroup&) = default;

private:
    std::size_t q_ = 0;
    std::vector<Point> gens_;
};

/// sum_i lambda_i a_i, overflow-checked.
Point s_degree(const Semigroup& s, const ExpVec& lambda);

/// Drops duplicates and every generator that lies in the semigroup generated
/// by the others. Survivors keep their input order.
Semigroup minimalize_generators(std::vector<Point> generators);

} // namespace pfrob
