#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "box.hpp"
#include "pfrob/cone.hpp"
#include "pfrob/factorization.hpp"
#include "pfrob/frobenius.hpp"

namespace pfrob {
namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::size_t component_of(const std::vector<std::vector<ExpVec>>& components, const ExpVec& m) {
    for (std::size_t c = 0; c < components.size(); ++c)
        if (std::find(components[c].begin(), components[c].end(), m) != components[c].end()) return c;
    return components.size();
}

} // namespace

std::vector<std::vector<ExpVec>> nabla_components(const Semigroup& s, const Point& m) {
    const FactorizationSet z = factorizations(s, m);
    const auto& facts = z.factorizations();
    DisjointSets sets(facts.size());
    for (std::size_t i = 0; i < facts.size(); ++i)
        for (std::size_t j = i + 1; j < facts.size(); ++j)
            if (!disjoint_support(facts[i], facts[j])) sets.unite(i, j);

    std::map<std::size_t, std::vector<ExpVec>> grouped;
    for (std::size_t i = 0; i < facts.size(); ++i) grouped[sets.find(i)].push_back(facts[i]);
    std::vector<std::vector<ExpVec>> components;
    for (auto& [root, members] : grouped) components.push_back(std::move(members));
    // Members inherit the decreasing order of Z_m; order components by their
    // largest member, decreasing.
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() > b.front(); });
    return components;
}

bool verify_minimal_ideal_basis(const Semigroup& s, std::span<const Binomial> basis) {
    std::map<Point, std::vector<const Binomial*>> by_degree;
    for (const Binomial& b : basis) {
        require(b.lead.size() == s.size() && b.trail.size() == s.size(), "binomial has the wrong number of variables");
        require(b.lead != b.trail, "zero binomial " + binomial_text(b));
        const Point m = s_degree(s, b.lead);
        require(m == s_degree(s, b.trail), "binomial " + binomial_text(b) + " is not S-homogeneous");
        by_degree[m].push_back(&b);
    }

    for (const auto& [m, group] : by_degree) {
        const auto components = nabla_components(s, m);
        if (components.size() < 2) return false;
        if (group.size() != components.size() - 1) return false;
        DisjointSets joined(components.size());
        for (const Binomial* b : group) {
            const std::size_t cu = component_of(components, b->lead);
            const std::size_t cv = component_of(components, b->trail);
            if (cu == cv) return false;
            // c - 1 edges joining distinct components form a spanning tree
            // exactly when none of them closes a cycle.
            if (!joined.unite(cu, cv)) return false;
        }
    }

    // The per-degree conditions only see degrees occurring in B; generation
    // of I_S covers the rest.
    const OrderSpec order(OrderKind::GradedLex);
    const GroebnerBasis generated = buchberger_reduced(std::vector<Binomial>(basis.begin(), basis.end()), order);
    for (const Binomial& g : toric_ideal_generators(s)) {
        if (normal_form(g.lead, generated) != normal_form(g.trail, generated)) return false;
    }
    return true;
}

namespace {

std::vector<Binomial> indispensable_in(const Semigroup& s, const GroebnerBasis& basis) {
    std::vector<Binomial> out;
    for (const Binomial& b : basis) {
        if (!disjoint_support(b.lead, b.trail)) continue;
        if (count_capped(s, s_degree(s, b.lead), 3) == 2) out.push_back(b);
    }
    return out;
}

} // namespace

std::vector<Binomial> indispensable_binomials(const Semigroup& s, OrderSpec order) {
    return indispensable_in(s, reduced_groebner_basis(s, order));
}

// Scanned set: {F_1(S)} together with the S-degrees of alpha + delta and
// beta + delta inside the 2*Lambda box, over indispensable X^alpha - X^beta.
// If #Z_m = 2 with Z_m = {g, g'}, then (g - min(g,g'), g' - min(g,g'))
// spans an indispensable binomial, and both g and g' lie in the 2*Lambda
// box, so every degree with exactly two factorizations is scanned.
FpRun run_f2_improved(const Semigroup& s, OrderSpec order) {
    FpRun run;
    if (!is_fp_finite(s)) return run;
    const GroebnerBasis basis = reduced_groebner_basis(s, order);
    const std::vector<Binomial> indispensable = indispensable_in(s, basis);
    const LambdaBounds lambda = lambda_bounds(s, basis);

    if (indispensable.empty()) {
        run = run_f1_staircase(s, order);
        run.indispensable_count = 0;
        return run;
    }
    const FrobeniusResult f1 = f1_staircase(s, order);
    run.lambda = lambda.lambda;
    run.basis_size = basis.size();
    run.indispensable_count = indispensable.size();

    std::vector<ExpVec> shifts;
    std::vector<Point> shift_degrees;
    for (const Binomial& b : indispensable) {
        shifts.push_back(b.lead);
        shifts.push_back(b.trail);
        shift_degrees.push_back(s_degree(s, b.lead));
    }
    const ExpVec upper = 2 * lambda.lambda;
    std::unordered_set<Point, IntVecHash> seen{f1.value()};
    detail::for_each_in_box(upper, [&](const ExpVec& delta) {
        Point base;
        bool have_base = false;
        for (std::size_t i = 0; i < shifts.size(); ++i) {
            if (!leq(delta + shifts[i], upper)) continue;
            if (!have_base) {
                base = s_degree(s, delta);
                have_base = true;
            }
            seen.insert(base + shift_degrees[i / 2]);
        }
    });

    std::vector<Point> candidates(seen.begin(), seen.end());
    std::sort(candidates.begin(), candidates.end(),
              [&](const Point& a, const Point& b) { return order.greater(a, b); });
    run.candidate_count = candidates.size();
    for (const Point& n : candidates) {
        ++run.scanned;
        const std::size_t count = count_capped(s, n, 3);
        if (count == 1 || count == 2) {
            run.result = FrobeniusResult::finite(n);
            return run;
        }
    }
    fail(ErrorCode::Validation, "F_1(S) was not confirmed by the scan; input is inconsistent");
}

FrobeniusResult f2_improved(const Semigroup& s, OrderSpec order) { return run_f2_improved(s, order).result; }

} // namespace pfrob
