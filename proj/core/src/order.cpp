#include "pfrob/order.hpp"

#include <string>

namespace pfrob {

std::string_view OrderSpec::name() const noexcept {
    return kind_ == OrderKind::GradedLex ? "grlex" : "grevlex";
}

OrderSpec OrderSpec::parse(std::string_view name) {
    if (name == "grlex") return OrderSpec(OrderKind::GradedLex);
    if (name == "grevlex") return OrderSpec(OrderKind::GradedRevLex);
    fail(ErrorCode::Validation,
         "unsupported monomial order '" + std::string(name) + "' (graded orders only: grlex, grevlex)");
}

std::strong_ordering OrderSpec::compare(std::span<const Int> a, std::span<const Int> b) const {
    if (a.size() != b.size())
        fail(ErrorCode::Validation, "cannot compare vectors of lengths " + std::to_string(a.size()) +
                                        " and " + std::to_string(b.size()));
    Int da = 0;
    Int db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        da = checked_add(da, a[i]);
        db = checked_add(db, b[i]);
    }
    if (da != db) return da <=> db;

    if (kind_ == OrderKind::GradedLex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
    } else {
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

} // namespace pfrob
