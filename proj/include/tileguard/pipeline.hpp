#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tileguard/corpus.hpp"
#include "tileguard/error.hpp"
#include "tileguard/ir_filter.hpp"
#include "tileguard/matchers.hpp"
#include "tileguard/metrics.hpp"
#include "tileguard/parallel.hpp"
#include "tileguard/seed_programs.hpp"
#include "tileguard/thresholds.hpp"
#include "tileguard/variants.hpp"

namespace tileguard {

enum class report_format { csv, json };

struct run_config {
    std::filesystem::path dataset_root;
    scenario_config scenario;
    bool fail_on_lex_error = false;
    unsigned threads = 1;
    std::vector<std::string>* warnings = nullptr;
};

struct report_row {
    pair_key id;
    double sim_ir = 0.0;
    bool passed = false;
    std::optional<double> sim_sm;  // present exactly for passed pairs
};

struct detection_report {
    dataset_stats stats;
    scenario_config scenario;
    std::optional<double> effective_threshold;
    std::vector<report_row> rows;  // sim_sm desc, then sim_ir desc, then id
};

namespace detail {

inline std::string fmt(double v, const char* spec = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string opt_fmt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string{};
}

inline void sort_report_rows(std::vector<report_row>& rows) {
    std::sort(rows.begin(), rows.end(), [](const report_row& a, const report_row& b) {
        if (a.sim_sm.has_value() != b.sim_sm.has_value()) return a.sim_sm.has_value();
        if (a.sim_sm != b.sim_sm) return a.sim_sm > b.sim_sm;
        if (a.sim_ir != b.sim_ir) return a.sim_ir > b.sim_ir;
        return a.id < b.id;
    });
}

// Run the configured string matcher over the selected pairs and record the
// similarity degrees in the table. Selection is by table index.
inline void fill_string_matches(similarity_table& table, const std::vector<comparison_pair>& pairs,
                                const scenario_config& scenario, const std::vector<std::size_t>& pair_indices,
                                unsigned threads) {
    std::vector<std::pair<std::size_t, std::size_t>> work;  // (pair index, table index)
    work.reserve(pair_indices.size());
    for (std::size_t k : pair_indices) work.emplace_back(k, table.index_of(pairs[k].id));
    std::vector<double> sims(work.size());
    parallel_for(work.size(), threads, [&](std::size_t w) {
        const comparison_pair& p = pairs[work[w].first];
        sims[w] = string_match(*p.a, *p.b, scenario.matcher, scenario.mml, scenario.scoring).similarity;
    });
    for (std::size_t w = 0; w < work.size(); ++w) table.set_sm(work[w].second, sims[w]);
}

}  // namespace detail

// Phases 1-4 once: lex, pair, IR-score, filter, then string-match only the
// pairs that passed. Deterministic for a fixed config and dataset.
inline detection_report run_detect(const run_config& cfg) {
    corpus c = load_dataset(cfg.dataset_root, {cfg.fail_on_lex_error, cfg.threads, cfg.warnings});
    std::vector<comparison_pair> pairs = generate_pairs(c);
    similarity_table table = score_pairs(pairs, cfg.threads);
    filter_outcome outcome = apply_filter(table, cfg.scenario);

    std::vector<std::size_t> passed_indices;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!outcome.is_excluded(pairs[k].id)) passed_indices.push_back(k);
    detail::fill_string_matches(table, pairs, cfg.scenario, passed_indices, cfg.threads);

    detection_report report;
    report.stats = compute_stats(c);
    report.scenario = cfg.scenario;
    report.effective_threshold = outcome.effective_threshold;
    report.rows.reserve(table.size());
    for (const sim_entry& e : table.entries())
        report.rows.push_back({e.id, e.sim_ir, !outcome.is_excluded(e.id), e.sim_sm});
    detail::sort_report_rows(report.rows);
    return report;
}

inline void write_detection_csv(const detection_report& report, std::ostream& os) {
    os << "pair_a,pair_b,sim_ir,passed,sim_sm\n";
    for (const report_row& r : report.rows) {
        os << r.id.first << ',' << r.id.second << ',' << detail::fmt(r.sim_ir) << ','
           << (r.passed ? "true" : "false") << ',' << detail::opt_fmt(r.sim_sm) << '\n';
    }
}

namespace detail {

inline nlohmann::ordered_json scenario_json(const scenario_config& sc) {
    return {{"mechanism", std::string(mechanism_name(sc.mech))},
            {"raw_threshold", sc.raw_threshold},
            {"matcher", std::string(matcher_name(sc.matcher))},
            {"mml", sc.mml},
            {"la_scoring",
             {{"match", sc.scoring.match}, {"mismatch", sc.scoring.mismatch}, {"gap", sc.scoring.gap}}}};
}

inline nlohmann::ordered_json stats_json(const dataset_stats& s) {
    return {{"id", s.id},
            {"submissions", s.submissions},
            {"min_token_size", s.min_tokens},
            {"max_token_size", s.max_tokens},
            {"avg_token_size", s.avg_tokens},
            {"pair_count", s.pair_count}};
}

}  // namespace detail

inline void write_detection_json(const detection_report& report, std::ostream& os) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["dataset"] = detail::stats_json(report.stats);
    j["scenario"] = detail::scenario_json(report.scenario);
    std::size_t passed = 0;
    for (const report_row& r : report.rows) passed += r.passed ? 1 : 0;
    j["filter"] = {{"effective_threshold",
                    report.effective_threshold ? nlohmann::ordered_json(*report.effective_threshold)
                                               : nlohmann::ordered_json(nullptr)},
                   {"passed", passed},
                   {"excluded", report.rows.size() - passed}};
    j["pairs"] = nlohmann::ordered_json::array();
    for (const report_row& r : report.rows) {
        nlohmann::ordered_json row{{"a", r.id.first}, {"b", r.id.second}, {"sim_ir", r.sim_ir}, {"passed", r.passed}};
        if (r.sim_sm) row["sim_sm"] = *r.sim_sm;
        j["pairs"].push_back(std::move(row));
    }
    os << j.dump(2) << '\n';
}

// IR-degree dump: one row per pair in id order.
inline void write_ir_csv(const detection_report& report, std::ostream& os) {
    std::vector<const report_row*> rows;
    rows.reserve(report.rows.size());
    for (const report_row& r : report.rows) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const report_row* a, const report_row* b) { return a->id < b->id; });
    os << "pair_id_a,pair_id_b,sim_ir\n";
    for (const report_row* r : rows)
        os << r->id.first << ',' << r->id.second << ',' << detail::fmt(r->sim_ir) << '\n';
}

inline void write_stats_csv(const std::vector<dataset_stats>& stats, std::ostream& os) {
    os << "id,submissions,min_token_size,max_token_size,avg_token_size,pair_count\n";
    for (const dataset_stats& s : stats) {
        os << s.id << ',' << s.submissions << ',' << s.min_tokens << ',' << s.max_tokens << ','
           << detail::fmt(s.avg_tokens, "%.2f") << ',' << s.pair_count << '\n';
    }
}

// ---------------------------------------------------------------------------
// Threshold sweep harness
// ---------------------------------------------------------------------------

struct sweep_config {
    std::filesystem::path dataset_root;
    matcher_kind matcher = matcher_kind::rkrgst;
    std::size_t mml = 3;
    la_scoring scoring{};
    bool fail_on_lex_error = false;
    unsigned threads = 1;
    std::vector<std::string>* warnings = nullptr;
};

struct sweep_scenario_row {
    std::string subdataset;
    scenario_report report;
};

// Across-sub-dataset mean of one scenario's metrics.
struct sweep_average_row {
    mechanism mech = mechanism::sm;
    double raw_threshold = 0.0;
    std::optional<double> effective_threshold;
    double nep_raw = 0.0;
    double nep_norm = 0.0;
    double anp_baseline = 0.0;
    double anp_filtered = 0.0;
    double ranp_pct = 0.0;
    double dep_raw = 0.0;
    double dep_norm = 0.0;
    std::optional<double> pearson_r;
};

struct correlation_report {
    std::vector<std::pair<std::string, std::optional<double>>> per_subdataset;
    std::optional<double> averaged;  // mean of defined per-sub-dataset coefficients
    std::optional<double> pooled;    // over all pairs of all sub-datasets
};

struct sweep_result {
    std::vector<dataset_stats> stats;
    std::vector<sweep_scenario_row> rows;       // 33 per sub-dataset
    std::vector<sweep_average_row> averages;    // present when > 1 sub-dataset
    correlation_report correlation;
};

inline const std::vector<double>& sweep_thresholds() {
    static const std::vector<double> ts = [] {
        std::vector<double> v;
        for (int i = 0; i <= 10; ++i) v.push_back(static_cast<double>(i) / 10.0);
        return v;
    }();
    return ts;
}

// Immediate subdirectories holding .java files are the sub-datasets; a root
// with loose .java files and no such subdirectories is one dataset itself.
inline std::vector<std::filesystem::path> subdataset_roots(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) throw io_error("dataset directory not found: " + root.string());
    std::vector<fs::path> subs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_directory()) continue;
        bool has_java = false;
        for (const auto& f : fs::recursive_directory_iterator(entry.path())) {
            if (f.is_regular_file() && f.path().extension() == ".java") {
                has_java = true;
                break;
            }
        }
        if (has_java) subs.push_back(entry.path());
    }
    std::sort(subs.begin(), subs.end());
    if (subs.empty()) subs.push_back(root);
    return subs;
}

// All 33 scenarios (SM, RM, PCM x 11 thresholds) per sub-dataset, reusing a
// single IR pass and a single full string-matching pass per sub-dataset.
inline sweep_result run_sweep(const sweep_config& cfg) {
    sweep_result result;
    std::vector<double> pooled_ir, pooled_sm;
    std::vector<double> sub_pearsons;

    for (const std::filesystem::path& sub : subdataset_roots(cfg.dataset_root)) {
        corpus c = load_dataset(sub, {cfg.fail_on_lex_error, cfg.threads, cfg.warnings});
        std::vector<comparison_pair> pairs = generate_pairs(c);
        similarity_table table = score_pairs(pairs, cfg.threads);

        scenario_config base{mechanism::sm, 0.0, cfg.matcher, cfg.mml, cfg.scoring};
        std::vector<std::size_t> all_indices(pairs.size());
        std::iota(all_indices.begin(), all_indices.end(), 0);
        detail::fill_string_matches(table, pairs, base, all_indices, cfg.threads);

        std::vector<std::size_t> rank_ir = rank_pairs(table, perspective::ir);
        std::vector<std::size_t> rank_sm = rank_pairs(table, perspective::sm);

        std::vector<double> xs, ys;
        for (const sim_entry& e : table.entries()) {
            xs.push_back(e.sim_ir);
            ys.push_back(*e.sim_sm);
            pooled_ir.push_back(e.sim_ir);
            pooled_sm.push_back(*e.sim_sm);
        }
        std::optional<double> sub_r;
        try {
            sub_r = pearson(xs, ys);
        } catch (const error&) {
            sub_r = std::nullopt;  // too few pairs or degenerate similarity
        }
        result.correlation.per_subdataset.emplace_back(c.dataset_id, sub_r);
        if (sub_r) sub_pearsons.push_back(*sub_r);

        const long long baseline = anp_baseline(table);
        result.stats.push_back(compute_stats(c));

        for (mechanism mech : {mechanism::sm, mechanism::rm, mechanism::pcm}) {
            for (double in : sweep_thresholds()) {
                scenario_config sc{mech, in, cfg.matcher, cfg.mml, cfg.scoring};
                filter_outcome outcome = apply_filter(table, sc);
                scenario_report rep;
                rep.scenario = sc;
                rep.effective_threshold = outcome.effective_threshold;
                nep_result ne = nep(outcome, table.size());
                rep.nep_raw = ne.raw;
                rep.nep_norm = ne.normalized;
                rep.anp_baseline = baseline;
                rep.anp_filtered = anp_filtered(table, outcome);
                rep.ranp_pct = ranp_pct(baseline, rep.anp_filtered);
                dep_result de = dep(table, rank_ir, rank_sm, outcome.excluded);
                rep.dep_raw = de.raw;
                rep.dep_norm = de.normalized;
                rep.pearson_r = sub_r;
                result.rows.push_back({c.dataset_id, std::move(rep)});
            }
        }
    }

    const std::size_t nsubs = result.stats.size();
    if (!sub_pearsons.empty()) {
        double s = 0.0;
        for (double r : sub_pearsons) s += r;
        result.correlation.averaged = s / static_cast<double>(sub_pearsons.size());
    }
    try {
        result.correlation.pooled = pearson(pooled_ir, pooled_sm);
    } catch (const error&) {
        result.correlation.pooled = std::nullopt;
    }

    if (nsubs > 1) {
        const std::size_t per_sub = 33;
        for (std::size_t s = 0; s < per_sub; ++s) {
            const scenario_report& first = result.rows[s].report;
            sweep_average_row avg;
            avg.mech = first.scenario.mech;
            avg.raw_threshold = first.scenario.raw_threshold;
            double eff = 0.0, nep_r = 0.0, nep_n = 0.0, base = 0.0, filt = 0.0, ranp = 0.0, dep_r = 0.0,
                   dep_n = 0.0;
            std::size_t eff_count = 0;
            for (std::size_t d = 0; d < nsubs; ++d) {
                const scenario_report& rep = result.rows[d * per_sub + s].report;
                if (rep.effective_threshold) {
                    eff += *rep.effective_threshold;
                    ++eff_count;
                }
                nep_r += static_cast<double>(rep.nep_raw);
                nep_n += rep.nep_norm;
                base += static_cast<double>(rep.anp_baseline);
                filt += static_cast<double>(rep.anp_filtered);
                ranp += rep.ranp_pct;
                dep_r += static_cast<double>(rep.dep_raw);
                dep_n += rep.dep_norm;
            }
            const double dn = static_cast<double>(nsubs);
            if (eff_count == nsubs) avg.effective_threshold = eff / dn;
            avg.nep_raw = nep_r / dn;
            avg.nep_norm = nep_n / dn;
            avg.anp_baseline = base / dn;
            avg.anp_filtered = filt / dn;
            avg.ranp_pct = ranp / dn;
            avg.dep_raw = dep_r / dn;
            avg.dep_norm = dep_n / dn;
            avg.pearson_r = result.correlation.averaged;
            result.averages.push_back(avg);
        }
    }
    return result;
}

inline constexpr std::string_view sweep_csv_header =
    "subdataset,mechanism,raw_threshold,effective_threshold,nep_raw,nep_norm,"
    "anp_baseline,anp_filtered,ranp_pct,dep_raw,dep_norm,pearson_r";

inline void write_sweep_csv(const sweep_result& result, std::ostream& os) {
    os << sweep_csv_header << '\n';
    for (const sweep_scenario_row& row : result.rows) {
        const scenario_report& r = row.report;
        os << row.subdataset << ',' << mechanism_name(r.scenario.mech) << ','
           << detail::fmt(r.scenario.raw_threshold) << ',' << detail::opt_fmt(r.effective_threshold) << ','
           << r.nep_raw << ',' << detail::fmt(r.nep_norm) << ',' << r.anp_baseline << ',' << r.anp_filtered
           << ',' << detail::fmt(r.ranp_pct) << ',' << r.dep_raw << ',' << detail::fmt(r.dep_norm) << ','
           << detail::opt_fmt(r.pearson_r) << '\n';
    }
    for (const sweep_average_row& a : result.averages) {
        os << "AVERAGE," << mechanism_name(a.mech) << ',' << detail::fmt(a.raw_threshold) << ','
           << detail::opt_fmt(a.effective_threshold) << ',' << detail::fmt(a.nep_raw) << ','
           << detail::fmt(a.nep_norm) << ',' << detail::fmt(a.anp_baseline) << ',' << detail::fmt(a.anp_filtered)
           << ',' << detail::fmt(a.ranp_pct) << ',' << detail::fmt(a.dep_raw) << ',' << detail::fmt(a.dep_norm)
           << ',' << detail::opt_fmt(a.pearson_r) << '\n';
    }
}

inline void write_sweep_json(const sweep_result& result, std::ostream& os) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["subdatasets"] = nlohmann::ordered_json::array();
    for (const dataset_stats& s : result.stats) j["subdatasets"].push_back(detail::stats_json(s));
    j["scenarios"] = nlohmann::ordered_json::array();
    for (const sweep_scenario_row& row : result.rows) {
        const scenario_report& r = row.report;
        nlohmann::ordered_json o{{"subdataset", row.subdataset},
                                 {"mechanism", std::string(mechanism_name(r.scenario.mech))},
                                 {"raw_threshold", r.scenario.raw_threshold},
                                 {"nep_raw", r.nep_raw},
                                 {"nep_norm", r.nep_norm},
                                 {"anp_baseline", r.anp_baseline},
                                 {"anp_filtered", r.anp_filtered},
                                 {"ranp_pct", r.ranp_pct},
                                 {"dep_raw", r.dep_raw},
                                 {"dep_norm", r.dep_norm}};
        if (r.effective_threshold) o["effective_threshold"] = *r.effective_threshold;
        if (r.pearson_r) o["pearson_r"] = *r.pearson_r;
        j["scenarios"].push_back(std::move(o));
    }
    nlohmann::ordered_json corr;
    corr["per_subdataset"] = nlohmann::ordered_json::array();
    for (const auto& [id, r] : result.correlation.per_subdataset) {
        corr["per_subdataset"].push_back(
            {{"subdataset", id}, {"pearson_r", r ? nlohmann::ordered_json(*r) : nlohmann::ordered_json(nullptr)}});
    }
    corr["averaged"] = result.correlation.averaged ? nlohmann::ordered_json(*result.correlation.averaged)
                                                   : nlohmann::ordered_json(nullptr);
    corr["pooled"] = result.correlation.pooled ? nlohmann::ordered_json(*result.correlation.pooled)
                                               : nlohmann::ordered_json(nullptr);
    j["correlation"] = std::move(corr);
    os << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Synthetic corpus generation
// ---------------------------------------------------------------------------

struct synth_config {
    std::filesystem::path out_root;
    std::size_t subdatasets = 1;
    std::size_t originals = 2;   // seed programs per sub-dataset (templates cycled)
    int max_level = 6;           // variants generated for levels 1..max_level
    std::size_t per_level = 2;   // variants per (original, level)
    std::uint64_t rng_seed = 42;
};

// Write a plagiarism-structured corpus: per sub-dataset a handful of original
// programs plus rendered token-level variants at every attack level.
inline void synthesize_corpus(const synth_config& cfg) {
    namespace fs = std::filesystem;
    if (cfg.subdatasets == 0 || cfg.originals == 0 || cfg.per_level == 0)
        throw error("synth: sub-dataset, original, and per-level counts must be positive");
    if (cfg.max_level < 1 || cfg.max_level > 6) throw invalid_level_error("synth: max level must be in 1..6");

    for (std::size_t s = 0; s < cfg.subdatasets; ++s) {
        fs::path dir = cfg.out_root / ("p" + std::to_string(s + 1));
        fs::create_directories(dir);
        for (std::size_t o = 0; o < cfg.originals; ++o) {
            const seed_program& tmpl = seed_programs[(s * cfg.originals + o) % seed_programs.size()];
            std::string stem = std::string(tmpl.name) + "_" + std::to_string(o + 1);
            {
                std::ofstream out(dir / (stem + ".java"), std::ios::binary);
                if (!out) throw io_error("cannot write " + (dir / (stem + ".java")).string());
                out << tmpl.source;
            }
            token_sequence seed = tokenize(tmpl.source, stem + ".java");
            std::uint64_t seq_seed =
                detail::splitmix64(cfg.rng_seed ^ (static_cast<std::uint64_t>(s) << 40) ^
                                   (static_cast<std::uint64_t>(o) << 20));
            for (int level = 1; level <= cfg.max_level; ++level) {
                for (auto& variant : generate_variants(seed, level, cfg.per_level, seq_seed)) {
                    std::ofstream out(dir / variant.submission_id, std::ios::binary);
                    if (!out) throw io_error("cannot write " + (dir / variant.submission_id).string());
                    out << render_java(variant);
                }
            }
        }
    }
}

}  // namespace tileguard
