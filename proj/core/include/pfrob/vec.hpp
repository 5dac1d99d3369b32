#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pfrob/checked.hpp"

namespace pfrob {

/// Fixed-length vector of integers. The tag keeps semigroup elements
/// (points of N^q) and exponent vectors (elements of N^h) apart.
template <class Tag>
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::size_t size, Int fill = 0) : v_(size, fill) {}
    IntVec(std::initializer_list<Int> init) : v_(init) {}
    explicit IntVec(std::vector<Int> values) : v_(std::move(values)) {}

    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }

    Int& operator[](std::size_t i) { return v_[i]; }
    Int operator[](std::size_t i) const { return v_[i]; }

    auto begin() noexcept { return v_.begin(); }
    auto end() noexcept { return v_.end(); }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }

    std::span<const Int> span() const noexcept { return v_; }
    const std::vector<Int>& values() const noexcept { return v_; }

    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](Int x) { return x == 0; });
    }

    bool is_non_negative() const {
        return std::all_of(v_.begin(), v_.end(), [](Int x) { return x >= 0; });
    }

    Int total_degree() const {
        Int d = 0;
        for (Int x : v_) d = checked_add(d, x);
        return d;
    }

    // Plain lexicographic comparison, for use as a container key only.
    // Monomial orders live in OrderSpec.
    friend bool operator==(const IntVec&, const IntVec&) = default;
    friend auto operator<=>(const IntVec&, const IntVec&) = default;

private:
    std::vector<Int> v_;
};

struct PointTag {};
struct ExpTag {};

/// An element of N^q.
using Point = IntVec<PointTag>;
/// An exponent vector in N^h: a factorization, or the exponent of a monomial.
using ExpVec = IntVec<ExpTag>;

template <class Tag>
IntVec<Tag> operator+(const IntVec<Tag>& a, const IntVec<Tag>& b) {
    IntVec<Tag> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

template <class Tag>
IntVec<Tag> operator-(const IntVec<Tag>& a, const IntVec<Tag>& b) {
    IntVec<Tag> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

template <class Tag>
IntVec<Tag> operator*(Int k, const IntVec<Tag>& a) {
    IntVec<Tag> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
    return r;
}

/// Componentwise a <= b; for exponent vectors, X^a divides X^b.
template <class Tag>
bool leq(const IntVec<Tag>& a, const IntVec<Tag>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

template <class Tag>
IntVec<Tag> componentwise_max(const IntVec<Tag>& a, const IntVec<Tag>& b) {
    IntVec<Tag> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

template <class Tag>
IntVec<Tag> componentwise_min(const IntVec<Tag>& a, const IntVec<Tag>& b) {
    IntVec<Tag> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

/// True when no coordinate is positive in both vectors.
template <class Tag>
bool disjoint_support(const IntVec<Tag>& a, const IntVec<Tag>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

template <class Tag>
std::string to_string(const IntVec<Tag>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

struct IntVecHash {
    template <class Tag>
    std::size_t operator()(const IntVec<Tag>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Int x : v) {
            h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace pfrob
