#pragma once

#include <string_view>

#include "pfrob/frobenius_result.hpp"
#include "pfrob/order.hpp"
#include "pfrob/semigroup.hpp"

namespace pfrob {

/// Parameters of S' = S (+)_{d,gamma} N^q, generated by {d a_1, ..., d a_h, gamma}.
struct GluingSpec {
    Int d = 2;
    Point gamma;
};

/// Throws Validation unless d >= 2, gcd(d, gcd(gamma)) = 1, gamma lies in S
/// and gamma is not a minimal generator of S.
void validate_gluing(const Semigroup& s, const GluingSpec& spec);

/// The glued semigroup; a non-minimal generator list is a Validation error.
Semigroup glue(const Semigroup& s, const GluingSpec& spec);

/// d F_p(S) + (d - 1) gamma, an upper bound for F_p(S'). p = 0 is accepted
/// for q = 1, where the bound is an equality.
Point fp_glued_bound(const Semigroup& s, Int p, const GluingSpec& spec, OrderSpec order);

enum class GluingVerdict { Equal, StrictlyLess, PreconditionFailed };

std::string_view verdict_name(GluingVerdict v);

/// Decides F_p(S') == d F_p(S) + (d - 1) gamma when #Z_{F_p(S)}(S) = p:
/// equality holds iff no factorization of gamma is componentwise below a
/// factorization of F_p(S).
GluingVerdict gluing_equality(const Semigroup& s, Int p, const GluingSpec& spec, OrderSpec order);

} // namespace pfrob
