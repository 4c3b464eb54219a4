#pragma once

// Exhaustive local-alignment enumeration, independent of the DP in
// matchers.hpp. An alignment is a strictly increasing chain of aligned index
// pairs; tokens skipped between consecutive aligned pairs cost one gap each.
// Exponential, for tiny inputs only.

#include <algorithm>
#include <vector>

#include "tileguard/matchers.hpp"
#include "tileguard/token.hpp"

namespace testgen {

inline long long la_brute_score(const std::vector<tileguard::token_kind>& a,
                                const std::vector<tileguard::token_kind>& b, tileguard::la_scoring sc) {
    struct rec {
        const std::vector<tileguard::token_kind>& a;
        const std::vector<tileguard::token_kind>& b;
        tileguard::la_scoring sc;

        // Best score of an alignment whose first aligned pair is (i, j).
        long long from(std::size_t i, std::size_t j) const {
            long long here = a[i] == b[j] ? sc.match : sc.mismatch;
            long long best_cont = 0;
            for (std::size_t i2 = i + 1; i2 < a.size(); ++i2) {
                for (std::size_t j2 = j + 1; j2 < b.size(); ++j2) {
                    long long gaps = static_cast<long long>((i2 - i - 1) + (j2 - j - 1)) * sc.gap;
                    best_cont = std::max(best_cont, gaps + from(i2, j2));
                }
            }
            return here + best_cont;
        }
    };

    rec r{a, b, sc};
    long long best = 0;  // the empty alignment scores zero
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) best = std::max(best, r.from(i, j));
    return best;
}

}  // namespace testgen
