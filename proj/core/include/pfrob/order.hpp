#pragma once

#include <compare>
#include <span>
#include <string_view>

#include "pfrob/vec.hpp"

namespace pfrob {

enum class OrderKind { GradedLex, GradedRevLex };

/// A graded monomial order: total degree first, then a tie-break.
///
/// Graded-lex breaks ties at the first differing coordinate (larger entry
/// wins); graded-reverse-lex at the last differing coordinate (smaller entry
/// wins). Coordinate 0 plays the role of the largest variable x_1.
class OrderSpec {
public:
    constexpr OrderSpec() = default;
    constexpr explicit OrderSpec(OrderKind kind) : kind_(kind) {}

    constexpr OrderKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept;

    /// Accepts "grlex" and "grevlex"; any other name (including non-graded
    /// orders such as "lex") is a Validation error.
    static OrderSpec parse(std::string_view name);

    std::strong_ordering compare(std::span<const Int> a, std::span<const Int> b) const;

    template <class Tag>
    std::strong_ordering compare(const IntVec<Tag>& a, const IntVec<Tag>& b) const {
        return compare(a.span(), b.span());
    }

    template <class Tag>
    bool less(const IntVec<Tag>& a, const IntVec<Tag>& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    template <class Tag>
    bool greater(const IntVec<Tag>& a, const IntVec<Tag>& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    friend bool operator==(OrderSpec, OrderSpec) = default;

private:
    OrderKind kind_ = OrderKind::GradedLex;
};

template <class Tag>
std::strong_ordering compare_graded(const OrderSpec& order, const IntVec<Tag>& a, const IntVec<Tag>& b) {
    return order.compare(a, b);
}

} // namespace pfrob
