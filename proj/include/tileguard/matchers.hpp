#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tileguard/error.hpp"
#include "tileguard/token.hpp"

namespace tileguard {

struct invalid_mml_error : error {
    using error::error;
};

struct invalid_scoring_error : error {
    using error::error;
};

struct too_large_for_oracle_error : error {
    using error::error;
};

// A matched token run shared by both sequences. Tiles of one result never
// overlap in either sequence.
struct tile {
    std::size_t start_a;
    std::size_t start_b;
    std::size_t length;

    bool operator==(const tile&) const = default;
};

struct match_result {
    double similarity = 0.0;    // in [0,1]
    long long coverage = 0;     // matched tokens (tiling) or raw optimal score (alignment)
    std::vector<tile> tiles;    // tiling only

    bool operator==(const match_result&) const = default;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> unmarked_runs(const std::vector<bool>& marked) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t i = 0;
    while (i < marked.size()) {
        if (marked[i]) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < marked.size() && !marked[i]) ++i;
        runs.emplace_back(start, i);
    }
    return runs;
}

inline constexpr std::uint64_t kr_base = 1099511628211ull;

inline std::uint64_t kr_pow(std::size_t e) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < e; ++i) p *= kr_base;
    return p;
}

// Rolling hashes of every length-len window lying inside an unmarked run.
// visit(start_index, hash) is called with ascending start indices.
template <class Visit>
void roll_windows(const std::vector<token_kind>& seq, const std::vector<bool>& marked, std::size_t len,
                  Visit&& visit) {
    const std::uint64_t top = kr_pow(len - 1);
    for (auto [s, e] : unmarked_runs(marked)) {
        if (e - s < len) continue;
        std::uint64_t h = 0;
        for (std::size_t i = s; i < s + len; ++i) h = h * kr_base + static_cast<std::uint64_t>(seq[i]) + 1;
        visit(s, h);
        for (std::size_t i = s + 1; i + len <= e; ++i) {
            h -= (static_cast<std::uint64_t>(seq[i - 1]) + 1) * top;
            h = h * kr_base + static_cast<std::uint64_t>(seq[i + len - 1]) + 1;
            visit(i, h);
        }
    }
}

struct kr_scan_result {
    bool found = false;
    std::vector<std::pair<std::size_t, std::size_t>> matches;  // (start_a, start_b), ascending
};

// All common unmarked substrings of exactly `len` tokens. Hash hits are
// verified by direct token comparison before they count.
inline kr_scan_result kr_scan(const std::vector<token_kind>& a, const std::vector<bool>& marked_a,
                              const std::vector<token_kind>& b, const std::vector<bool>& marked_b,
                              std::size_t len, bool collect) {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> b_windows;
    roll_windows(b, marked_b, len, [&](std::size_t j, std::uint64_t h) { b_windows[h].push_back(j); });

    kr_scan_result result;
    if (b_windows.empty()) return result;
    bool done = false;
    roll_windows(a, marked_a, len, [&](std::size_t i, std::uint64_t h) {
        if (done) return;
        auto it = b_windows.find(h);
        if (it == b_windows.end()) return;
        for (std::size_t j : it->second) {
            if (!std::equal(a.begin() + static_cast<std::ptrdiff_t>(i),
                            a.begin() + static_cast<std::ptrdiff_t>(i + len),
                            b.begin() + static_cast<std::ptrdiff_t>(j)))
                continue;
            result.found = true;
            if (!collect) {
                done = true;
                return;
            }
            result.matches.emplace_back(i, j);
        }
    });
    return result;
}

inline match_result finish_tiling(std::vector<tile> tiles, std::size_t size_a, std::size_t size_b) {
    match_result r;
    r.tiles = std::move(tiles);
    for (const tile& t : r.tiles) r.coverage += static_cast<long long>(t.length);
    std::size_t total = size_a + size_b;
    r.similarity = total == 0 ? 0.0 : 2.0 * static_cast<double>(r.coverage) / static_cast<double>(total);
    return r;
}

// Greedy tiling with positional tie-breaking is order-sensitive: which of two
// conflicting equal-length matches gets marked depends on which sequence is
// "a". Canonicalizing the orientation (shorter sequence first, lexicographic
// kind order on equal length) makes the result symmetric; tiles are
// transposed back into the caller's orientation afterwards.
inline bool tiling_swaps_arguments(const std::vector<token_kind>& a, const std::vector<token_kind>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
}

inline void transpose_tiles(match_result& r) {
    for (tile& t : r.tiles) std::swap(t.start_a, t.start_b);
}

}  // namespace detail

// Greedy string tiling accelerated with Karp-Rabin rolling hashes: each round
// binary-searches the longest common unmarked substring (at least mml tokens)
// and marks every non-overlapping occurrence of that length as a tile, in
// ascending (start_a, start_b) order. Produces exactly the tiling of
// gst_oracle.
inline match_result rkrgst_similarity(const token_sequence& sa, const token_sequence& sb, std::size_t mml) {
    if (mml < 1) throw invalid_mml_error("minimum match length must be >= 1");
    std::vector<token_kind> a = kinds_of(sa);
    std::vector<token_kind> b = kinds_of(sb);
    const bool swapped = detail::tiling_swaps_arguments(a, b);
    if (swapped) std::swap(a, b);
    std::vector<bool> marked_a(a.size(), false), marked_b(b.size(), false);
    std::vector<tile> tiles;

    while (!a.empty() && !b.empty()) {
        // Longest length with any common unmarked substring; existence is
        // monotone in the length, so bisection applies.
        std::size_t lo = mml, hi = std::min(a.size(), b.size()), longest = 0;
        while (lo <= hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (detail::kr_scan(a, marked_a, b, marked_b, mid, false).found) {
                longest = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;  // mid >= mml >= 1, no wrap
            }
        }
        if (longest == 0) break;

        auto matches = detail::kr_scan(a, marked_a, b, marked_b, longest, true).matches;
        for (auto [i, j] : matches) {
            bool overlaps = false;
            for (std::size_t t = 0; t < longest && !overlaps; ++t)
                overlaps = marked_a[i + t] || marked_b[j + t];
            if (overlaps) continue;
            for (std::size_t t = 0; t < longest; ++t) marked_a[i + t] = marked_b[j + t] = true;
            tiles.push_back({i, j, longest});
        }
    }
    match_result r = detail::finish_tiling(std::move(tiles), a.size(), b.size());
    if (swapped) detail::transpose_tiles(r);
    return r;
}

// Reference greedy string tiling: plain cubic scan for the longest unmarked
// common substring, one tile marked per round, ties broken by smallest
// start_a then start_b. Small inputs only.
inline match_result gst_oracle(const token_sequence& sa, const token_sequence& sb, std::size_t mml) {
    if (mml < 1) throw invalid_mml_error("minimum match length must be >= 1");
    if (sa.size() > 64 || sb.size() > 64)
        throw too_large_for_oracle_error("gst_oracle accepts sequences of at most 64 tokens");
    std::vector<token_kind> a = kinds_of(sa);
    std::vector<token_kind> b = kinds_of(sb);
    const bool swapped = detail::tiling_swaps_arguments(a, b);
    if (swapped) std::swap(a, b);
    std::vector<bool> marked_a(a.size(), false), marked_b(b.size(), false);
    std::vector<tile> tiles;

    while (true) {
        tile best{0, 0, 0};
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (marked_a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (marked_b[j] || a[i] != b[j]) continue;
                std::size_t k = 0;
                while (i + k < a.size() && j + k < b.size() && !marked_a[i + k] && !marked_b[j + k] &&
                       a[i + k] == b[j + k])
                    ++k;
                if (k > best.length) best = {i, j, k};
            }
        }
        if (best.length < mml) break;
        for (std::size_t t = 0; t < best.length; ++t)
            marked_a[best.start_a + t] = marked_b[best.start_b + t] = true;
        tiles.push_back(best);
    }
    match_result r = detail::finish_tiling(std::move(tiles), a.size(), b.size());
    if (swapped) detail::transpose_tiles(r);
    return r;
}

enum class matcher_kind { rkrgst, la };

struct la_scoring {
    int match = 2;
    int mismatch = -1;
    int gap = -1;

    bool operator==(const la_scoring&) const = default;
};

// Smith-Waterman local alignment over token kinds. The raw score is the
// maximum DP cell; similarity normalizes by the best attainable score
// match * min(|a|,|b|), so a fully contained copy scores 1.
inline match_result local_alignment_similarity(const token_sequence& sa, const token_sequence& sb,
                                               la_scoring scoring = {}) {
    if (scoring.match <= 0 || scoring.mismatch > 0 || scoring.gap > 0)
        throw invalid_scoring_error("need match > 0, mismatch <= 0, gap <= 0");
    const std::vector<token_kind> a = kinds_of(sa);
    const std::vector<token_kind> b = kinds_of(sb);
    match_result r;
    if (a.empty() || b.empty()) return r;

    std::vector<long long> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    long long best = 0;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            long long diag = prev[j - 1] + (a[i - 1] == b[j - 1] ? scoring.match : scoring.mismatch);
            long long up = prev[j] + scoring.gap;
            long long left = cur[j - 1] + scoring.gap;
            cur[j] = std::max({0ll, diag, up, left});
            best = std::max(best, cur[j]);
        }
        std::swap(prev, cur);
    }

    r.coverage = best;
    double denom = static_cast<double>(scoring.match) * static_cast<double>(std::min(a.size(), b.size()));
    r.similarity = std::clamp(static_cast<double>(best) / denom, 0.0, 1.0);
    return r;
}

// Dispatch on the configured matcher.
inline match_result string_match(const token_sequence& a, const token_sequence& b, matcher_kind matcher,
                                 std::size_t mml, la_scoring scoring) {
    return matcher == matcher_kind::rkrgst ? rkrgst_similarity(a, b, mml)
                                           : local_alignment_similarity(a, b, scoring);
}

}  // namespace tileguard
