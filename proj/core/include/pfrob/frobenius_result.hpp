#pragma once

#include <optional>
#include <string>

#include "pfrob/error.hpp"
#include "pfrob/vec.hpp"

namespace pfrob {

/// Either a point of N^q or the value (inf, ..., inf).
class FrobeniusResult {
public:
    static FrobeniusResult finite(Point value) { return FrobeniusResult(std::move(value)); }
    static FrobeniusResult infinite() { return FrobeniusResult(); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }

    const Point& value() const {
        if (!value_) fail(ErrorCode::Validation, "Frobenius vector is infinite");
        return *value_;
    }

    std::string to_string() const { return value_ ? pfrob::to_string(*value_) : "infinite"; }

    friend bool operator==(const FrobeniusResult&, const FrobeniusResult&) = default;

private:
    FrobeniusResult() = default;
    explicit FrobeniusResult(Point value) : value_(std::move(value)) {}

    std::optional<Point> value_;
};

} // namespace pfrob
