#include "pfrob/factorization.hpp"

#include <limits>
#include <string>

namespace pfrob {
namespace {

class FactorizationSearch {
public:
    FactorizationSearch(std::span<const Point> gens, const Point& n,
                        const std::function<bool(const ExpVec&)>& visit)
        : gens_(gens), residual_(n.values()), lambda_(gens.size()), visit_(visit) {
        const std::size_t h = gens.size();
        const std::size_t q = n.size();
        // coverable_[k][j]: some generator with index >= k has a positive j-th coordinate.
        coverable_.assign(h + 1, std::vector<char>(q, 0));
        for (std::size_t k = h; k-- > 0;) {
            for (std::size_t j = 0; j < q; ++j)
                coverable_[k][j] = coverable_[k + 1][j] || gens[k][j] > 0;
        }
    }

    void run() { step(0); }

private:
    bool step(std::size_t k) {
        const std::size_t q = residual_.size();
        for (std::size_t j = 0; j < q; ++j)
            if (residual_[j] > 0 && !coverable_[k][j]) return true;
        if (k == gens_.size()) return visit_(lambda_);

        const Point& a = gens_[k];
        Int most = std::numeric_limits<Int>::max();
        for (std::size_t j = 0; j < q; ++j)
            if (a[j] > 0) most = std::min(most, residual_[j] / a[j]);

        if (k + 1 == gens_.size()) {
            for (std::size_t j = 0; j < q; ++j)
                if (residual_[j] != most * a[j]) return true;
            lambda_[k] = most;
            bool keep_going = visit_(lambda_);
            lambda_[k] = 0;
            return keep_going;
        }

        for (std::size_t j = 0; j < q; ++j) residual_[j] -= most * a[j];
        for (Int m = most; m >= 0; --m) {
            lambda_[k] = m;
            if (!step(k + 1)) {
                lambda_[k] = 0;
                return false;
            }
            for (std::size_t j = 0; j < q; ++j) residual_[j] += a[j];
        }
        // The loop added a back once more than it subtracted.
        for (std::size_t j = 0; j < q; ++j) residual_[j] -= a[j];
        lambda_[k] = 0;
        return true;
    }

    std::span<const Point> gens_;
    std::vector<Int> residual_;
    ExpVec lambda_;
    std::vector<std::vector<char>> coverable_;
    const std::function<bool(const ExpVec&)>& visit_;
};

void check_element(std::span<const Point> gens, const Point& n) {
    if (!gens.empty() && n.size() != gens.front().size())
        fail(ErrorCode::Validation, "element " + to_string(n) + " has dimension " + std::to_string(n.size()) +
                                        ", expected " + std::to_string(gens.front().size()));
    if (!n.is_non_negative()) fail(ErrorCode::Validation, "element " + to_string(n) + " has a negative coordinate");
}

} // namespace

void for_each_factorization(std::span<const Point> generators, const Point& n,
                            const std::function<bool(const ExpVec&)>& visit) {
    check_element(generators, n);
    FactorizationSearch(generators, n, visit).run();
}

FactorizationSet factorizations(const Semigroup& s, const Point& n) {
    std::vector<ExpVec> found;
    for_each_factorization(s.generators(), n, [&](const ExpVec& lambda) {
        found.push_back(lambda);
        return true;
    });
    return FactorizationSet(n, std::move(found));
}

std::size_t count_capped(std::span<const Point> generators, const Point& n, std::size_t cap) {
    require(cap >= 1, "count cap must be positive");
    std::size_t count = 0;
    for_each_factorization(generators, n, [&](const ExpVec&) { return ++count < cap; });
    return count;
}

std::size_t count_capped(const Semigroup& s, const Point& n, std::size_t cap) {
    return count_capped(s.generators(), n, cap);
}

bool contains(std::span<const Point> generators, const Point& n) {
    return count_capped(generators, n, 1) == 1;
}

bool contains(const Semigroup& s, const Point& n) { return contains(s.generators(), n); }

} // namespace pfrob
