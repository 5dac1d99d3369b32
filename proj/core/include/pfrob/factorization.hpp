#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pfrob/semigroup.hpp"

namespace pfrob {

/// Z_n(S): all exponent vectors lambda with sum_i lambda_i a_i = n.
/// Factorizations are stored in lexicographically decreasing order.
class FactorizationSet {
public:
    FactorizationSet(Point element, std::vector<ExpVec> factorizations)
        : element_(std::move(element)), facts_(std::move(factorizations)) {}

    const Point& element() const noexcept { return element_; }
    const std::vector<ExpVec>& factorizations() const noexcept { return facts_; }
    std::size_t size() const noexcept { return facts_.size(); }
    bool empty() const noexcept { return facts_.empty(); }
    auto begin() const noexcept { return facts_.begin(); }
    auto end() const noexcept { return facts_.end(); }

private:
    Point element_;
    std::vector<ExpVec> facts_;
};

/// Depth-first enumeration over generator multiplicities; the visitor
/// returns false to stop early.
void for_each_factorization(std::span<const Point> generators, const Point& n,
                            const std::function<bool(const ExpVec&)>& visit);

FactorizationSet factorizations(const Semigroup& s, const Point& n);

/// min(#Z_n(S), cap).
std::size_t count_capped(const Semigroup& s, const Point& n, std::size_t cap);
std::size_t count_capped(std::span<const Point> generators, const Point& n, std::size_t cap);

bool contains(const Semigroup& s, const Point& n);
bool contains(std::span<const Point> generators, const Point& n);

} // namespace pfrob
