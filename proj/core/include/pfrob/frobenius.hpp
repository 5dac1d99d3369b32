#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pfrob/frobenius_result.hpp"
#include "pfrob/groebner.hpp"
#include "pfrob/order.hpp"
#include "pfrob/semigroup.hpp"

namespace pfrob {

/// Lambda = (lambda_1, ..., lambda_h): lambda_k a_k has a factorization that
/// does not use a_k.
struct LambdaBounds {
    ExpVec lambda;
};

/// Minimal exponent of a pure power x_k^e among the monomials of the basis,
/// for every k. Requires is_fp_finite(s).
LambdaBounds lambda_bounds(const Semigroup& s, const GroebnerBasis& basis);

/// Distinct points sum_i gamma_i a_i with 0 <= gamma_i <= p lambda_i, sorted
/// lexicographically.
std::vector<Point> candidate_degrees(const Semigroup& s, const LambdaBounds& lambda, Int p);

/// Omega (every monomial of a reduced basis) and the finite down-set of
/// exponent vectors divisible by no element of Omega.
struct StaircaseComplement {
    std::vector<ExpVec> omega;
    std::vector<ExpVec> complement;
};

/// Requires a pure power of every variable in Omega (true for the reduced
/// basis of any S with finite F_p); otherwise the complement is infinite.
StaircaseComplement staircase_complement(const GroebnerBasis& basis);

/// Result of one Frobenius computation, with the intermediate sizes that
/// the CLI reports.
struct FpRun {
    FrobeniusResult result = FrobeniusResult::infinite();
    std::optional<ExpVec> lambda;
    std::size_t basis_size = 0;
    /// Distinct S-degrees of the search box (or staircase complement).
    std::size_t candidate_count = 0;
    /// Candidates whose factorizations were counted before the scan stopped.
    std::size_t scanned = 0;
    std::optional<std::size_t> omega_size;
    std::optional<std::size_t> complement_size;
    std::optional<std::size_t> indispensable_count;
};

/// F_p(S) by scanning the distinct degrees of the p*Lambda box in
/// decreasing order. p = 0 is delegated to f0_numerical for q = 1 and is
/// Unsupported for q >= 2.
FpRun run_fp_general(const Semigroup& s, Int p, OrderSpec order);
FrobeniusResult fp_general(const Semigroup& s, Int p, OrderSpec order);

/// F_1(S) from the Lambda box: keep standard monomials outside the ideal
/// generated by the trailing terms.
FpRun run_f1_normalform(const Semigroup& s, OrderSpec order);
FrobeniusResult f1_normalform(const Semigroup& s, OrderSpec order);

/// F_1(S) as the largest S-degree of the staircase complement of Omega.
FpRun run_f1_staircase(const Semigroup& s, OrderSpec order);
FrobeniusResult f1_staircase(const Semigroup& s, OrderSpec order);

/// F_2(S) using indispensable binomials; see run_f2_improved in
/// indispensable.cpp for the scanned set.
FpRun run_f2_improved(const Semigroup& s, OrderSpec order);
FrobeniusResult f2_improved(const Semigroup& s, OrderSpec order);

/// Frobenius number of a numerical semigroup (q = 1); Infinite when the
/// generators are not coprime.
FrobeniusResult f0_numerical(const Semigroup& s);

/// Connected components of the graph on Z_m(S) joining factorizations that
/// share a variable; its connectivity is that of the complex nabla_m.
/// Components are sorted, each component internally sorted decreasingly.
std::vector<std::vector<ExpVec>> nabla_components(const Semigroup& s, const Point& m);

/// Whether B is a minimal generating set of I_S (component criterion per
/// S-degree, plus generation of I_S).
bool verify_minimal_ideal_basis(const Semigroup& s, std::span<const Binomial> basis);

/// Binomials X^a - X^b of the reduced basis with Z_m(S) = {a, b} and
/// disjoint supports.
std::vector<Binomial> indispensable_binomials(const Semigroup& s, OrderSpec order = OrderSpec());

} // namespace pfrob
