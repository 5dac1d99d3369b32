#include "pfrob/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

#include "box.hpp"
#include "pfrob/cone.hpp"
#include "pfrob/factorization.hpp"

namespace pfrob {
namespace {

std::vector<Point> without(const std::vector<Point>& gens, std::size_t skip) {
    std::vector<Point> rest;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != skip) rest.push_back(gens[i]);
    return rest;
}

// Index of the only non-zero coordinate, or npos.
std::size_t pure_power_variable(const ExpVec& m) {
    std::size_t found = std::string::npos;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (found != std::string::npos) return std::string::npos;
        found = i;
    }
    return found;
}

void sort_descending(std::vector<Point>& points, const OrderSpec& order) {
    std::sort(points.begin(), points.end(), [&](const Point& a, const Point& b) { return order.greater(a, b); });
}

const Point& max_under(const std::vector<Point>& points, const OrderSpec& order) {
    return *std::max_element(points.begin(), points.end(),
                             [&](const Point& a, const Point& b) { return order.less(a, b); });
}

std::vector<Point> distinct(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

bool divisible_by_any(const ExpVec& m, const std::vector<ExpVec>& divisors) {
    return std::any_of(divisors.begin(), divisors.end(), [&](const ExpVec& d) { return leq(d, m); });
}

} // namespace

LambdaBounds lambda_bounds(const Semigroup& s, const GroebnerBasis& basis) {
    if (!is_fp_finite(s))
        fail(ErrorCode::Validation, "F_p(S) is infinite: some extremal ray carries a single generator");
    const std::size_t h = s.size();
    ExpVec lambda(h);
    for (const Binomial& b : basis) {
        for (const ExpVec* m : {&b.lead, &b.trail}) {
            const std::size_t k = pure_power_variable(*m);
            if (k == std::string::npos || k >= h) continue;
            lambda[k] = lambda[k] == 0 ? (*m)[k] : std::min(lambda[k], (*m)[k]);
        }
    }
    for (std::size_t k = 0; k < h; ++k) {
        if (lambda[k] != 0) continue;
        const std::vector<Point> rest = without(s.generators(), k);
        for (Int e = 1;; ++e) {
            if (contains(rest, e * s.generator(k))) {
                lambda[k] = e;
                break;
            }
        }
    }
    return LambdaBounds{lambda};
}

std::vector<Point> candidate_degrees(const Semigroup& s, const LambdaBounds& lambda, Int p) {
    require(p >= 1, "candidate_degrees needs p >= 1");
    require(lambda.lambda.size() == s.size(), "Lambda has the wrong length");
    const ExpVec upper = p * lambda.lambda;
    std::vector<Point> degrees;
    detail::for_each_in_box(upper, [&](const ExpVec& gamma) { degrees.push_back(s_degree(s, gamma)); });
    return distinct(std::move(degrees));
}

StaircaseComplement staircase_complement(const GroebnerBasis& basis) {
    StaircaseComplement out;
    for (const Binomial& b : basis) {
        out.omega.push_back(b.lead);
        out.omega.push_back(b.trail);
    }
    std::sort(out.omega.begin(), out.omega.end());
    out.omega.erase(std::unique(out.omega.begin(), out.omega.end()), out.omega.end());
    if (out.omega.empty()) fail(ErrorCode::Validation, "empty basis: the staircase complement is infinite");

    const std::size_t h = out.omega.front().size();
    ExpVec upper(h);
    for (std::size_t k = 0; k < h; ++k) {
        Int e = 0;
        for (const ExpVec& w : out.omega)
            if (pure_power_variable(w) == k) e = e == 0 ? w[k] : std::min(e, w[k]);
        if (e == 0)
            fail(ErrorCode::Validation, "no pure power of x" + std::to_string(k + 1) +
                                            " among the basis monomials: the staircase complement is infinite");
        upper[k] = e - 1;
    }
    detail::for_each_in_box(upper, [&](const ExpVec& gamma) {
        if (!divisible_by_any(gamma, out.omega)) out.complement.push_back(gamma);
    });
    return out;
}

FpRun run_fp_general(const Semigroup& s, Int p, OrderSpec order) {
    require(p >= 0, "p must be non-negative");
    FpRun run;
    if (p == 0) {
        if (s.dim() != 1)
            fail(ErrorCode::Unsupported, "F_0 of an affine semigroup with q >= 2 (gap-set computation) is not supported");
        run.result = f0_numerical(s);
        return run;
    }
    if (!is_fp_finite(s)) return run;

    const GroebnerBasis basis = reduced_groebner_basis(s, order);
    const LambdaBounds lambda = lambda_bounds(s, basis);
    std::vector<Point> candidates = candidate_degrees(s, lambda, p);
    run.lambda = lambda.lambda;
    run.basis_size = basis.size();
    run.candidate_count = candidates.size();

    sort_descending(candidates, order);
    const auto cap = static_cast<std::size_t>(p) + 1;
    for (const Point& n : candidates) {
        ++run.scanned;
        const std::size_t count = count_capped(s, n, cap);
        if (count >= 1 && count < cap) {
            run.result = FrobeniusResult::finite(n);
            return run;
        }
    }
    // The origin always has exactly one factorization.
    fail(ErrorCode::Validation, "no candidate with at most p factorizations; input is inconsistent");
}

FrobeniusResult fp_general(const Semigroup& s, Int p, OrderSpec order) { return run_fp_general(s, p, order).result; }

FpRun run_f1_normalform(const Semigroup& s, OrderSpec order) {
    FpRun run;
    if (!is_fp_finite(s)) return run;
    const GroebnerBasis basis = reduced_groebner_basis(s, order);
    const LambdaBounds lambda = lambda_bounds(s, basis);
    run.lambda = lambda.lambda;
    run.basis_size = basis.size();

    std::vector<ExpVec> trails;
    for (const Binomial& b : basis) trails.push_back(b.trail);

    std::vector<Point> survivors;
    detail::for_each_in_box(lambda.lambda, [&](const ExpVec& gamma) {
        ++run.scanned;
        if (normal_form(gamma, basis) != gamma) return;
        if (divisible_by_any(gamma, trails)) return;
        survivors.push_back(s_degree(s, gamma));
    });
    survivors = distinct(std::move(survivors));
    run.candidate_count = survivors.size();
    run.result = FrobeniusResult::finite(max_under(survivors, order));
    return run;
}

FrobeniusResult f1_normalform(const Semigroup& s, OrderSpec order) { return run_f1_normalform(s, order).result; }

FpRun run_f1_staircase(const Semigroup& s, OrderSpec order) {
    FpRun run;
    if (!is_fp_finite(s)) return run;
    const GroebnerBasis basis = reduced_groebner_basis(s, order);
    const StaircaseComplement stairs = staircase_complement(basis);
    run.lambda = lambda_bounds(s, basis).lambda;
    run.basis_size = basis.size();
    run.omega_size = stairs.omega.size();
    run.complement_size = stairs.complement.size();

    std::vector<Point> degrees;
    for (const ExpVec& gamma : stairs.complement) degrees.push_back(s_degree(s, gamma));
    degrees = distinct(std::move(degrees));
    run.candidate_count = degrees.size();
    run.scanned = stairs.complement.size();
    run.result = FrobeniusResult::finite(max_under(degrees, order));
    return run;
}

FrobeniusResult f1_staircase(const Semigroup& s, OrderSpec order) { return run_f1_staircase(s, order).result; }

FrobeniusResult f0_numerical(const Semigroup& s) {
    require(s.dim() == 1, "the Frobenius number is defined for numerical semigroups (q = 1)");
    std::vector<Int> gens;
    Int g = 0;
    for (const Point& a : s.generators()) {
        gens.push_back(a[0]);
        g = gcd_abs(g, a[0]);
    }
    if (g != 1) return FrobeniusResult::infinite();
    std::sort(gens.begin(), gens.end());
    const Int m = gens.front();
    require(m > 1, "S = N has no gaps, so its Frobenius number is undefined");
    // Apery set with respect to m: the least element of S in each residue
    // class mod m, by shortest paths on the residues. F = max(Ap) - m.
    constexpr Int unreached = std::numeric_limits<Int>::max();
    std::vector<Int> apery(static_cast<std::size_t>(m), unreached);
    using Entry = std::pair<Int, Int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    apery[0] = 0;
    queue.push({0, 0});
    while (!queue.empty()) {
        const auto [dist, r] = queue.top();
        queue.pop();
        if (dist != apery[static_cast<std::size_t>(r)]) continue;
        for (std::size_t i = 1; i < gens.size(); ++i) {
            const Int next = checked_add(dist, gens[i]);
            const auto slot = static_cast<std::size_t>(next % m);
            if (next < apery[slot]) {
                apery[slot] = next;
                queue.push({next, static_cast<Int>(slot)});
            }
        }
    }
    return FrobeniusResult::finite(Point{*std::max_element(apery.begin(), apery.end()) - m});
}

} // namespace pfrob
