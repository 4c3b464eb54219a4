#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "tileguard/error.hpp"
#include "tileguard/ir_filter.hpp"
#include "tileguard/thresholds.hpp"

namespace tileguard {

struct missing_similarity_error : error {
    using error::error;
};

struct unknown_pair_error : error {
    using error::error;
};

struct length_mismatch_error : error {
    using error::error;
};

struct zero_variance_error : error {
    using error::error;
};

struct zero_baseline_error : error {
    using error::error;
};

struct nep_result {
    std::size_t raw = 0;
    double normalized = 0.0;
};

// Number of excluded pairs, raw and normalized toward total pairs.
inline nep_result nep(const filter_outcome& outcome, std::size_t total_pairs) {
    if (total_pairs == 0 || outcome.excluded.size() > total_pairs)
        throw error("nep: excluded count exceeds total pairs");
    return {outcome.excluded.size(),
            static_cast<double>(outcome.excluded.size()) / static_cast<double>(total_pairs)};
}

namespace detail {

// Asymptotic cost of the IR measurement for one pair: linear in both sizes.
inline long long t_ir(const sim_entry& e) {
    return static_cast<long long>(e.size_a) + static_cast<long long>(e.size_b);
}

// Asymptotic cost of string matching one pair: cubic in the larger size.
inline long long t_s(const sim_entry& e) {
    long long m = std::max(e.size_a, e.size_b);
    return m * m * m;
}

}  // namespace detail

// Cost of string matching every pair, with no filter in front.
inline long long anp_baseline(const similarity_table& table) {
    long long total = 0;
    for (const sim_entry& e : table.entries()) total += detail::t_s(e);
    return total;
}

// Cost of the filtered pipeline: every pair pays the IR measurement, and the
// pairs that survive filtering additionally pay string matching.
inline long long anp_filtered(const similarity_table& table, const filter_outcome& outcome) {
    long long total = 0;
    for (const sim_entry& e : table.entries()) {
        total += detail::t_ir(e);
        if (!outcome.is_excluded(e.id)) total += detail::t_s(e);
    }
    return total;
}

// Threshold form: a pair is matched iff sim_ir >= t.
inline long long anp_filtered(const similarity_table& table, double t) {
    long long total = 0;
    for (const sim_entry& e : table.entries()) {
        total += detail::t_ir(e);
        if (e.sim_ir >= t) total += detail::t_s(e);
    }
    return total;
}

// Percentage reduction relative to the string-matching-only baseline.
// Negative when filtering overhead outweighs the exclusions.
inline double ranp_pct(long long baseline, long long filtered) {
    if (baseline <= 0) throw zero_baseline_error("ranp: baseline must be positive");
    return 100.0 * static_cast<double>(baseline - filtered) / static_cast<double>(baseline);
}

enum class perspective { ir, sm };

// Dense ranks aligned with table entry order: rank 1 goes to the pair with
// the highest similarity under the chosen perspective, ties broken by
// ascending pair id. The result is a bijection onto 1..N.
inline std::vector<std::size_t> rank_pairs(const similarity_table& table, perspective p) {
    const auto& entries = table.entries();
    auto sim_of = [&](std::size_t i) -> double {
        if (p == perspective::ir) return entries[i].sim_ir;
        if (!entries[i].sim_sm)
            throw missing_similarity_error("rank_pairs: pair lacks string-matching similarity (" +
                                           entries[i].id.first + ", " + entries[i].id.second + ")");
        return *entries[i].sim_sm;
    };
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double sa = sim_of(a), sb = sim_of(b);
        if (sa != sb) return sa > sb;
        return entries[a].id < entries[b].id;
    });
    std::vector<std::size_t> ranks(entries.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r + 1;
    return ranks;
}

struct dep_result {
    long long raw = 0;
    double normalized = 0.0;
};

// Dissonance of the excluded set: sum of IR ranks minus sum of SM ranks over
// the excluded pairs. Normalized by the global worst case
// floor(N/2) * ceil(N/2), the maximum of n * (N - n).
inline dep_result dep(const similarity_table& table, const std::vector<std::size_t>& rank_ir,
                      const std::vector<std::size_t>& rank_sm, const std::vector<pair_key>& excluded) {
    if (rank_ir.size() != table.size() || rank_sm.size() != table.size())
        throw length_mismatch_error("dep: rank tables must cover every pair");
    long long raw = 0;
    for (const pair_key& id : excluded) {
        const sim_entry* e = table.find(id);
        if (e == nullptr)
            throw unknown_pair_error("dep: excluded pair not in table (" + id.first + ", " + id.second + ")");
        std::size_t idx = static_cast<std::size_t>(e - table.entries().data());
        raw += static_cast<long long>(rank_ir[idx]) - static_cast<long long>(rank_sm[idx]);
    }
    const std::size_t n = table.size();
    const long long worst = static_cast<long long>(n / 2) * static_cast<long long>((n + 1) / 2);
    return {raw, worst == 0 ? 0.0 : static_cast<double>(raw) / static_cast<double>(worst)};
}

// Sample Pearson correlation coefficient.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw length_mismatch_error("pearson: need two equal-length samples of size >= 2");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw zero_variance_error("pearson: zero variance input");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// One evaluation scenario's metric row.
struct scenario_report {
    scenario_config scenario;
    std::optional<double> effective_threshold;  // SM/RM only
    std::size_t nep_raw = 0;
    double nep_norm = 0.0;
    long long anp_baseline = 0;
    long long anp_filtered = 0;
    double ranp_pct = 0.0;
    long long dep_raw = 0;
    double dep_norm = 0.0;
    std::optional<double> pearson_r;
};

}  // namespace tileguard
