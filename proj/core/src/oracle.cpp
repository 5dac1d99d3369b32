#include "pfrob/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pfrob/cone.hpp"

namespace pfrob {
namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(const OracleBudget& budget) : end_(Clock::now() + budget.wall) {}

    void check() const {
        if (Clock::now() > end_) fail(ErrorCode::OracleBudget, "oracle exceeded its wall-clock budget");
    }

private:
    Clock::time_point end_;
};

// counts[idx] = #Z_n(S) for every n in the box [0, extent], by unbounded
// coin-change over the generators.
class CountGrid {
public:
    CountGrid(const Semigroup& s, Point extent, const OracleBudget& budget) : extent_(std::move(extent)) {
        const std::size_t q = extent_.size();
        strides_.resize(q);
        std::size_t cells = 1;
        for (std::size_t j = q; j-- > 0;) {
            strides_[j] = cells;
            const auto width = static_cast<std::size_t>(extent_[j]) + 1;
            if (cells > budget.max_cells / width)
                fail(ErrorCode::OracleBudget, "oracle grid " + to_string(extent_) + " exceeds the cell budget");
            cells *= width;
        }
        counts_.assign(cells, 0);
        counts_[0] = 1;

        const Deadline deadline(budget);
        for (const Point& a : s.generators()) {
            if (!leq(a, extent_)) continue;
            std::size_t offset = 0;
            for (std::size_t j = 0; j < q; ++j) offset += static_cast<std::size_t>(a[j]) * strides_[j];
            Point at(q);
            for (std::size_t idx = 0; idx < cells; ++idx) {
                if ((idx & 0xffff) == 0) deadline.check();
                if (leq(a, at)) counts_[idx] = checked_add(counts_[idx], counts_[idx - offset]);
                advance(at);
            }
        }
    }

    std::size_t cells() const noexcept { return counts_.size(); }
    const Point& extent() const noexcept { return extent_; }

    Int count(const Point& n) const {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n.size(); ++j) idx += static_cast<std::size_t>(n[j]) * strides_[j];
        return counts_[idx];
    }

    template <class Visit>
    void for_each(Visit visit) const {
        Point at(extent_.size());
        for (std::size_t idx = 0; idx < counts_.size(); ++idx) {
            visit(at, counts_[idx]);
            advance(at);
        }
    }

private:
    // Row-major successor; the last coordinate moves fastest.
    void advance(Point& at) const {
        for (std::size_t j = at.size(); j-- > 0;) {
            if (at[j] < extent_[j]) {
                ++at[j];
                return;
            }
            at[j] = 0;
        }
    }

    Point extent_;
    std::vector<std::size_t> strides_;
    std::vector<Int> counts_;
};

// Membership of target in the semigroup generated by gens[from..].
bool representable(const std::vector<Point>& gens, std::size_t from, const Point& target) {
    if (target.is_zero()) return true;
    if (from == gens.size()) return false;
    const Point& a = gens[from];
    Point rest = target;
    while (true) {
        if (representable(gens, from + 1, rest)) return true;
        if (!leq(a, rest)) return false;
        rest = rest - a;
    }
}

ExpVec search_lambda(const Semigroup& s, const Deadline& deadline) {
    ExpVec lambda(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<Point> others;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != k) others.push_back(s.generator(i));
        for (Int e = 1;; ++e) {
            deadline.check();
            if (representable(others, 0, e * s.generator(k))) {
                lambda[k] = e;
                break;
            }
        }
    }
    return lambda;
}

OracleReport numerical_frobenius(const Semigroup& s, const OracleBudget& budget) {
    require(s.dim() == 1, "the oracle computes F_0 only for numerical semigroups (q = 1)");
    Int g = 0;
    Int smallest = s.generator(0)[0];
    for (const Point& a : s.generators()) {
        g = gcd_abs(g, a[0]);
        smallest = std::min(smallest, a[0]);
    }
    require(g == 1, "F_0 is infinite: generators are not coprime");
    require(smallest > 1, "S = N has no gaps");

    // Sieve upwards; once `smallest` consecutive members appear, every
    // larger integer is a member too.
    const Deadline deadline(budget);
    std::vector<char> member{1};
    Int run = 1;
    Int last_gap = -1;
    for (Int n = 1; run < smallest; ++n) {
        if ((n & 0xffff) == 0) deadline.check();
        if (static_cast<std::size_t>(n) >= budget.max_cells) fail(ErrorCode::OracleBudget, "sieve exceeded the cell budget");
        bool in = false;
        for (const Point& a : s.generators())
            if (a[0] <= n && member[static_cast<std::size_t>(n - a[0])]) in = true;
        member.push_back(in ? 1 : 0);
        if (in) {
            ++run;
        } else {
            run = 0;
            last_gap = n;
        }
    }
    OracleReport report;
    report.result = FrobeniusResult::finite(Point{last_gap});
    report.scanned_bound = static_cast<Int>(member.size()) - 1;
    report.grid_extent = Point{report.scanned_bound};
    report.cells = member.size();
    report.certificate = "sieved 0.." + std::to_string(report.scanned_bound) + "; the last " +
                         std::to_string(smallest) + " integers are members, so every larger integer is";
    return report;
}

} // namespace

OracleReport oracle_fp(const Semigroup& s, Int p, OrderSpec order, const OracleBudget& budget) {
    require(p >= 0, "p must be non-negative");
    if (p == 0) return numerical_frobenius(s, budget);
    require(is_fp_finite(s), "F_p(S) is infinite: some extremal ray carries a single generator");

    const Deadline deadline(budget);
    OracleReport report;
    const ExpVec lambda = search_lambda(s, deadline);
    report.lambda = lambda;

    Point extent(s.dim());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Int mult = checked_mul(p, lambda[i]);
        extent = extent + mult * s.generator(i);
        report.scanned_bound = checked_add(report.scanned_bound, checked_mul(mult, s.generator(i).total_degree()));
    }
    const CountGrid grid(s, extent, budget);
    report.grid_extent = grid.extent();
    report.cells = grid.cells();

    std::optional<Point> best;
    grid.for_each([&](const Point& n, Int count) {
        if (count < 1 || count > p) return;
        if (!best || order.greater(n, *best)) best = n;
    });
    report.result = FrobeniusResult::finite(*best);
    report.certificate = "exact counts on the grid [0," + to_string(extent) + "] (" + std::to_string(grid.cells()) +
                         " cells), which contains every point of the p*Lambda box; every element with at most p "
                         "factorizations lies in that box";
    return report;
}

std::map<Point, Int> oracle_counts_up_to(const Semigroup& s, Int degree_bound, const OracleBudget& budget) {
    require(degree_bound >= 0, "degree bound must be non-negative");
    const CountGrid grid(s, Point(std::vector<Int>(s.dim(), degree_bound)), budget);
    std::map<Point, Int> out;
    grid.for_each([&](const Point& n, Int count) {
        if (n.total_degree() <= degree_bound) out.emplace(n, count);
    });
    return out;
}

Int oracle_count(const Semigroup& s, const Point& n, const OracleBudget& budget) {
    require(n.size() == s.dim(), "element has the wrong dimension");
    require(n.is_non_negative(), "element has a negative coordinate");
    const CountGrid grid(s, n, budget);
    return grid.count(n);
}

} // namespace pfrob
