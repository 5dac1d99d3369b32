#include "pfrob/gluing.hpp"

#include <algorithm>
#include <string>

#include "pfrob/factorization.hpp"
#include "pfrob/frobenius.hpp"

namespace pfrob {
namespace {

Point finite_fp(const Semigroup& s, Int p, OrderSpec order) {
    const FrobeniusResult f = fp_general(s, p, order);
    if (f.is_infinite()) fail(ErrorCode::Validation, "F_" + std::to_string(p) + "(S) is infinite");
    return f.value();
}

} // namespace

void validate_gluing(const Semigroup& s, const GluingSpec& spec) {
    require(spec.d >= 2, "gluing needs d >= 2");
    require(spec.gamma.size() == s.dim(), "gamma has dimension " + std::to_string(spec.gamma.size()) +
                                              ", expected " + std::to_string(s.dim()));
    require(spec.gamma.is_non_negative(), "gamma has a negative coordinate");
    Int g = 0;
    for (Int x : spec.gamma) g = gcd_abs(g, x);
    require(gcd_abs(spec.d, g) == 1, "d = " + std::to_string(spec.d) + " and gcd" + to_string(spec.gamma) +
                                         " = " + std::to_string(g) + " are not coprime");
    const auto& gens = s.generators();
    require(std::find(gens.begin(), gens.end(), spec.gamma) == gens.end(),
            "gamma " + to_string(spec.gamma) + " is a minimal generator of S");
    require(contains(s, spec.gamma), "gamma " + to_string(spec.gamma) + " is not in S");
}

Semigroup glue(const Semigroup& s, const GluingSpec& spec) {
    validate_gluing(s, spec);
    std::vector<Point> gens;
    for (const Point& a : s.generators()) gens.push_back(spec.d * a);
    gens.push_back(spec.gamma);
    try {
        return Semigroup(std::move(gens));
    } catch (const Error& e) {
        fail(ErrorCode::Validation, std::string("glued generator list is not minimal: ") + e.what());
    }
}

Point fp_glued_bound(const Semigroup& s, Int p, const GluingSpec& spec, OrderSpec order) {
    validate_gluing(s, spec);
    require(p >= 0, "p must be non-negative");
    return spec.d * finite_fp(s, p, order) + (spec.d - 1) * spec.gamma;
}

std::string_view verdict_name(GluingVerdict v) {
    switch (v) {
    case GluingVerdict::Equal: return "equal";
    case GluingVerdict::StrictlyLess: return "strictly_less";
    case GluingVerdict::PreconditionFailed: return "precondition_failed";
    }
    return "unknown";
}

GluingVerdict gluing_equality(const Semigroup& s, Int p, const GluingSpec& spec, OrderSpec order) {
    validate_gluing(s, spec);
    require(p >= 1, "gluing_equality needs p >= 1");
    const Point fp = finite_fp(s, p, order);
    const FactorizationSet z_fp = factorizations(s, fp);
    if (z_fp.size() != static_cast<std::size_t>(p)) return GluingVerdict::PreconditionFailed;
    const FactorizationSet z_gamma = factorizations(s, spec.gamma);
    for (const ExpVec& b : z_gamma)
        for (const ExpVec& c : z_fp)
            if (leq(b, c)) return GluingVerdict::StrictlyLess;
    return GluingVerdict::Equal;
}

} // namespace pfrob
