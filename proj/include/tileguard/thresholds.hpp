#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tileguard/error.hpp"
#include "tileguard/ir_filter.hpp"
#include "tileguard/matchers.hpp"

namespace tileguard {

struct out_of_range_error : error {
    using error::error;
};

struct inverted_range_error : error {
    using error::error;
};

// The three thresholding mechanisms that reinterpret the raw threshold `in`:
//   SM  - static: the raw threshold is the similarity cutoff as-is.
//   RM  - range-based: `in` is a proportion of the observed similarity range,
//         t = sim_min + in * (sim_max - sim_min).
//   PCM - pair-count-based: `in` is a proportion of the pair count; the
//         floor(in * total_pairs) lowest-similarity pairs are excluded.
enum class mechanism { sm, rm, pcm };

struct scenario_config {
    mechanism mech = mechanism::sm;
    double raw_threshold = 0.0;  // `in`, always a fraction in [0,1]
    matcher_kind matcher = matcher_kind::rkrgst;
    std::size_t mml = 3;
    la_scoring scoring{};
};

// Pairs that survive filtering vs. pairs excluded from string matching.
// passed and excluded partition the table's pair ids.
struct filter_outcome {
    std::vector<pair_key> passed;    // sorted
    std::vector<pair_key> excluded;  // sorted
    std::optional<double> effective_threshold;  // SM/RM only

    bool is_excluded(const pair_key& id) const {
        return std::binary_search(excluded.begin(), excluded.end(), id);
    }
};

namespace detail {

inline void check_raw_threshold(double in) {
    if (!(in >= 0.0 && in <= 1.0))
        throw out_of_range_error("raw threshold must be in [0,1], got " + std::to_string(in));
}

}  // namespace detail

inline double static_threshold(double in) {
    detail::check_raw_threshold(in);
    return in;
}

// t = sim_min + in * (sim_max - sim_min). Endpoints return the exact extrema
// and interior values are clamped into [sim_min, sim_max] so the effective
// threshold is monotone in `in` even under floating-point rounding.
inline double range_threshold(double in, double sim_min, double sim_max) {
    detail::check_raw_threshold(in);
    if (!(sim_min >= 0.0 && sim_max <= 1.0))
        throw out_of_range_error("similarity extrema must be in [0,1]");
    if (sim_min > sim_max) throw inverted_range_error("sim_min exceeds sim_max");
    if (in == 0.0 || sim_min == sim_max) return sim_min;
    if (in == 1.0) return sim_max;
    return std::clamp(sim_min + in * (sim_max - sim_min), sim_min, sim_max);
}

// floor(in * total_pairs), with a tiny nudge so decimal thresholds keep their
// exact rational value (0.3 of 10 pairs cuts 3, not 2).
inline std::size_t pair_count_cut(double in, std::size_t total_pairs) {
    detail::check_raw_threshold(in);
    return static_cast<std::size_t>(std::floor(in * static_cast<double>(total_pairs) + 1e-9));
}

inline std::size_t pair_count_cut(double in, const similarity_table& table) {
    return pair_count_cut(in, table.size());
}

// Split the table into passed and excluded pair sets. SM/RM pass a pair iff
// sim_ir >= effective threshold. PCM excludes exactly pair_count_cut(in)
// pairs with the lowest sim_ir, ties broken by ascending pair id (smaller id
// excluded first).
inline filter_outcome apply_filter(const similarity_table& table, const scenario_config& config) {
    if (table.empty()) throw error("apply_filter: empty similarity table");

    filter_outcome out;
    const auto& entries = table.entries();

    if (config.mech == mechanism::pcm) {
        std::size_t k = pair_count_cut(config.raw_threshold, table.size());
        std::vector<std::size_t> order(entries.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (entries[a].sim_ir != entries[b].sim_ir) return entries[a].sim_ir < entries[b].sim_ir;
            return entries[a].id < entries[b].id;
        });
        std::vector<bool> cut(entries.size(), false);
        for (std::size_t i = 0; i < k; ++i) cut[order[i]] = true;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            (cut[i] ? out.excluded : out.passed).push_back(entries[i].id);
        }
        return out;
    }

    double t = config.mech == mechanism::sm
                   ? static_threshold(config.raw_threshold)
                   : range_threshold(config.raw_threshold, table.sim_min(), table.sim_max());
    out.effective_threshold = t;
    for (const sim_entry& e : entries) {
        (e.sim_ir >= t ? out.passed : out.excluded).push_back(e.id);
    }
    return out;
}

inline std::string_view mechanism_name(mechanism m) {
    switch (m) {
        case mechanism::sm: return "SM";
        case mechanism::rm: return "RM";
        case mechanism::pcm: return "PCM";
    }
    return "?";
}

inline std::string_view matcher_name(matcher_kind m) {
    return m == matcher_kind::rkrgst ? "RKRGST" : "LA";
}

}  // namespace tileguard
