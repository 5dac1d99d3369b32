#include "pfrob/groebner.hpp"

#include <limits>
#include <queue>
#include <set>

namespace pfrob {
namespace {

// A graded order, optionally preceded by an elimination block: when
// block_start < n, the variables [block_start, n) are compared first (graded
// within the block) and the remaining variables only break ties.
class TermOrder {
public:
    explicit TermOrder(OrderSpec base, std::size_t block_start = std::numeric_limits<std::size_t>::max())
        : base_(base), block_start_(block_start) {}

    std::strong_ordering compare(const ExpVec& a, const ExpVec& b) const {
        const std::span<const Int> sa = a.span();
        const std::span<const Int> sb = b.span();
        if (block_start_ >= sa.size()) return base_.compare(sa, sb);
        auto head = base_.compare(sa.subspan(block_start_), sb.subspan(block_start_));
        if (head != std::strong_ordering::equal) return head;
        return base_.compare(sa.first(block_start_), sb.first(block_start_));
    }

    bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) == std::strong_ordering::less; }

private:
    OrderSpec base_;
    std::size_t block_start_;
};

bool coprime(const ExpVec& a, const ExpVec& b) { return disjoint_support(a, b); }

class BinomialEngine {
public:
    explicit BinomialEngine(TermOrder order) : order_(order) {}

    void add(const ExpVec& a, const ExpVec& b) {
        ExpVec u = reduce(a);
        ExpVec v = reduce(b);
        if (u == v) return;
        if (order_.less(u, v)) std::swap(u, v);
        const std::size_t fresh = basis_.size();
        basis_.push_back(Binomial{std::move(u), std::move(v)});
        for (std::size_t i = 0; i < fresh; ++i) {
            queue_.push(Pair{componentwise_max(basis_[i].lead, basis_[fresh].lead), i, fresh});
            pending_.insert({i, fresh});
        }
    }

    void run() {
        while (!queue_.empty()) {
            Pair pair = queue_.top();
            queue_.pop();
            pending_.erase({pair.i, pair.j});
            const Binomial& f = basis_[pair.i];
            const Binomial& g = basis_[pair.j];
            if (coprime(f.lead, g.lead)) continue;
            if (chain_criterion(pair)) continue;
            ExpVec u = pair.lcm - f.lead + f.trail;
            ExpVec v = pair.lcm - g.lead + g.trail;
            add(u, v);
        }
    }

    // Minimal leads, trails in normal form, sorted by increasing lead.
    std::vector<Binomial> reduced() const {
        std::vector<Binomial> kept;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j || !leq(basis_[j].lead, basis_[i].lead)) continue;
                redundant = basis_[j].lead != basis_[i].lead || j < i;
            }
            if (!redundant) kept.push_back(basis_[i]);
        }
        for (Binomial& b : kept) b.trail = reduce_with(kept, b.trail);
        std::sort(kept.begin(), kept.end(),
                  [&](const Binomial& x, const Binomial& y) { return order_.less(x.lead, y.lead); });
        return kept;
    }

    static ExpVec reduce_with(const std::vector<Binomial>& basis, ExpVec m) {
        for (bool changed = true; changed;) {
            changed = false;
            for (const Binomial& b : basis) {
                if (leq(b.lead, m)) {
                    m = m - b.lead + b.trail;
                    changed = true;
                    break;
                }
            }
        }
        return m;
    }

private:
    struct Pair {
        ExpVec lcm;
        std::size_t i;
        std::size_t j;
    };

    struct LaterPair {
        const TermOrder* order;
        bool operator()(const Pair& x, const Pair& y) const {
            auto c = order->compare(x.lcm, y.lcm);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
            return std::tie(x.j, x.i) > std::tie(y.j, y.i);
        }
    };

    ExpVec reduce(const ExpVec& m) const { return reduce_with(basis_, m); }

    bool is_pending(std::size_t a, std::size_t b) const {
        return pending_.contains({std::min(a, b), std::max(a, b)});
    }

    bool chain_criterion(const Pair& pair) const {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!leq(basis_[k].lead, pair.lcm)) continue;
            if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) return true;
        }
        return false;
    }

    TermOrder order_;
    std::vector<Binomial> basis_;
    std::priority_queue<Pair, std::vector<Pair>, LaterPair> queue_{LaterPair{&order_}};
    std::set<std::pair<std::size_t, std::size_t>> pending_;
};

} // namespace

Binomial make_binomial(ExpVec a, ExpVec b, const OrderSpec& order) {
    require(a.size() == b.size(), "binomial monomials have different lengths");
    require(a.is_non_negative() && b.is_non_negative(), "binomial exponents must be non-negative");
    auto c = order.compare(a, b);
    require(c != std::strong_ordering::equal, "binomial " + monomial_text(a) + " - " + monomial_text(b) + " is zero");
    if (c == std::strong_ordering::less) std::swap(a, b);
    return Binomial{std::move(a), std::move(b)};
}

std::vector<Binomial> toric_ideal_generators(const Semigroup& s) {
    const std::size_t h = s.size();
    const std::size_t q = s.dim();
    BinomialEngine engine{TermOrder(OrderSpec(OrderKind::GradedLex), h)};
    for (std::size_t i = 0; i < h; ++i) {
        ExpVec x(h + q);
        x[i] = 1;
        ExpVec t(h + q);
        for (std::size_t j = 0; j < q; ++j) t[h + j] = s.generator(i)[j];
        engine.add(x, t);
    }
    engine.run();

    std::vector<Binomial> out;
    const OrderSpec grlex(OrderKind::GradedLex);
    for (const Binomial& b : engine.reduced()) {
        bool free_of_t = true;
        for (std::size_t j = h; j < h + q; ++j) free_of_t = free_of_t && b.lead[j] == 0 && b.trail[j] == 0;
        if (!free_of_t) continue;
        ExpVec lead(std::vector<Int>(b.lead.begin(), b.lead.begin() + static_cast<std::ptrdiff_t>(h)));
        ExpVec trail(std::vector<Int>(b.trail.begin(), b.trail.begin() + static_cast<std::ptrdiff_t>(h)));
        out.push_back(make_binomial(std::move(lead), std::move(trail), grlex));
    }
    return out;
}

GroebnerBasis buchberger_reduced(const std::vector<Binomial>& generators, OrderSpec order) {
    BinomialEngine engine{TermOrder(order)};
    for (const Binomial& b : generators) {
        require(b.lead.size() == b.trail.size(), "binomial monomials have different lengths");
        engine.add(b.lead, b.trail);
    }
    engine.run();
    return GroebnerBasis(order, engine.reduced());
}

GroebnerBasis reduced_groebner_basis(const Semigroup& s, OrderSpec order) {
    return buchberger_reduced(toric_ideal_generators(s), order);
}

ExpVec normal_form(const ExpVec& m, const GroebnerBasis& basis) {
    return BinomialEngine::reduce_with(basis.elements(), m);
}

std::string monomial_text(const ExpVec& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(i + 1);
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string binomial_text(const Binomial& b) { return monomial_text(b.lead) + " - " + monomial_text(b.trail); }

} // namespace pfrob
