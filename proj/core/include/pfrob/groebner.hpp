#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfrob/order.hpp"
#include "pfrob/semigroup.hpp"

namespace pfrob {

/// The pure binomial X^lead - X^trail.
struct Binomial {
    ExpVec lead;
    ExpVec trail;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Orients X^a - X^b so that the lead is the larger monomial under order.
/// a == b is rejected.
Binomial make_binomial(ExpVec a, ExpVec b, const OrderSpec& order);

/// A reduced Groebner basis of a binomial ideal: leads are pairwise
/// non-divisible and no trail is divisible by any lead.
class GroebnerBasis {
public:
    GroebnerBasis(OrderSpec order, std::vector<Binomial> elements)
        : order_(order), elements_(std::move(elements)) {}

    const OrderSpec& order() const noexcept { return order_; }
    const std::vector<Binomial>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

private:
    OrderSpec order_;
    std::vector<Binomial> elements_;
};

/// A finite generating set of the semigroup ideal I_S, obtained by
/// eliminating auxiliary variables t_1..t_q from <x_i - t^{a_i}>.
/// Returned binomials are oriented under graded-lex.
std::vector<Binomial> toric_ideal_generators(const Semigroup& s);

/// Buchberger's algorithm (normal selection strategy, coprime and chain
/// criteria) followed by interreduction. Input binomials may be oriented
/// under any order; they are re-oriented under `order`.
GroebnerBasis buchberger_reduced(const std::vector<Binomial>& generators, OrderSpec order);

/// Reduced Groebner basis of I_S under `order`.
GroebnerBasis reduced_groebner_basis(const Semigroup& s, OrderSpec order);

/// Normal form of the monomial X^m modulo the basis; always a monomial.
ExpVec normal_form(const ExpVec& m, const GroebnerBasis& basis);

/// "x1^3*x2", or "1" for the zero exponent vector.
std::string monomial_text(const ExpVec& m);
/// "x1^3 - x2^2".
std::string binomial_text(const Binomial& b);

} // namespace pfrob
