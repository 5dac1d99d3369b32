#include "pfrob/semigroup.hpp"

#include <string>

#include "pfrob/factorization.hpp"

namespace pfrob {
namespace {

void check_shape(const std::vector<Point>& gens) {
    require(!gens.empty(), "a semigroup needs at least one generator");
    const std::size_t q = gens.front().size();
    require(q >= 1, "generators must have dimension at least 1");
    for (const Point& g : gens) {
        require(g.size() == q, "generator " + to_string(g) + " does not have dimension " + std::to_string(q));
        require(g.is_non_negative(), "generator " + to_string(g) + " has a negative coordinate");
        require(!g.is_zero(), "the zero vector cannot be a generator");
    }
}

std::vector<Point> without(const std::vector<Point>& gens, std::size_t skip) {
    std::vector<Point> rest;
    rest.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != skip) rest.push_back(gens[i]);
    return rest;
}

} // namespace

Semigroup::Semigroup(std::vector<Point> generators) : gens_(std::move(generators)) {
    check_shape(gens_);
    q_ = gens_.front().size();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            require(gens_[i] != gens_[j], "duplicate generator " + to_string(gens_[i]));
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        require(!contains(without(gens_, i), gens_[i]),
                "generating set is not minimal: " + to_string(gens_[i]) + " is generated by the others");
    }
}

Point s_degree(const Semigroup& s, const ExpVec& lambda) {
    require(lambda.size() == s.size(), "exponent vector has length " + std::to_string(lambda.size()) +
                                           ", expected " + std::to_string(s.size()));
    Point n(s.dim());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (lambda[i] == 0) continue;
        const Point& a = s.generator(i);
        for (std::size_t j = 0; j < s.dim(); ++j) n[j] = checked_add(n[j], checked_mul(lambda[i], a[j]));
    }
    return n;
}

Semigroup minimalize_generators(std::vector<Point> generators) {
    check_shape(generators);
    std::vector<Point> distinct;
    for (Point& g : generators) {
        if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(std::move(g));
    }
    // Reducibility of an element does not change when another reducible
    // element is dropped, so a single pass suffices.
    for (std::size_t i = 0; i < distinct.size();) {
        if (distinct.size() > 1 && contains(without(distinct, i), distinct[i])) {
            distinct.erase(distinct.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return Semigroup(std::move(distinct));
}

} // namespace pfrob
