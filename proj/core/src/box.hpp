#pragma once

#include <functional>

#include "pfrob/vec.hpp"

namespace pfrob::detail {

/// Visits every gamma with 0 <= gamma <= upper, last coordinate fastest.
inline void for_each_in_box(const ExpVec& upper, const std::function<void(const ExpVec&)>& visit) {
    for (Int u : upper)
        if (u < 0) return;
    ExpVec gamma(upper.size());
    while (true) {
        visit(gamma);
        std::size_t i = gamma.size();
        while (i > 0) {
            --i;
            if (gamma[i] < upper[i]) {
                ++gamma[i];
                break;
            }
            gamma[i] = 0;
            if (i == 0) return;
        }
        if (gamma.size() == 0) return;
    }
}

} // namespace pfrob::detail
