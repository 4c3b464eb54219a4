// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Each criterion carries its runtime budget
// and tolerance in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/la_oracle.hpp"
#include "support/temp_dir.hpp"
#include "tileguard/tileguard.hpp"

using namespace tileguard;

namespace {

struct check_context {
    std::string failure;

    bool require(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
        return ok;
    }
};

struct criterion {
    int number;
    std::string name;
    double budget_ms;  // <= 0 means no runtime bound
    std::function<void(check_context&)> body;
};

// --- 1. paper worked examples -----------------------------------------------

void paper_worked_examples(check_context& ctx) {
    double t = range_threshold(0.5, 0.3, 0.8);
    ctx.require(std::abs(t - 0.55) <= 1e-12, "range_threshold(0.5,0.3,0.8) != 0.55, got " + std::to_string(t));
    std::size_t k = pair_count_cut(0.5, 30);
    ctx.require(k == 15, "pair_count_cut(0.5, 30 pairs) != 15, got " + std::to_string(k));
}

// --- 2. oracle equivalence ---------------------------------------------------

void oracle_equivalence(check_context& ctx) {
    std::mt19937_64 g(42);
    for (int round = 0; round < 1200 && ctx.failure.empty(); ++round) {
        token_sequence a = testgen::random_sequence(g, 12, 4, "a");
        token_sequence b = testgen::random_sequence(g, 12, 4, "b");
        std::size_t mml = 1 + testgen::bounded(g, 3);
        match_result fast = rkrgst_similarity(a, b, mml);
        match_result slow = gst_oracle(a, b, mml);
        ctx.require(fast == slow, "rkrgst != gst_oracle at round " + std::to_string(round));
    }
    for (int round = 0; round < 500 && ctx.failure.empty(); ++round) {
        token_sequence a = testgen::random_sequence(g, 8, 3, "a");
        token_sequence b = testgen::random_sequence(g, 8, 3, "b");
        long long brute = testgen::la_brute_score(kinds_of(a), kinds_of(b), {2, -1, -1});
        long long dp = local_alignment_similarity(a, b, {2, -1, -1}).coverage;
        ctx.require(dp == brute, "LA DP != enumeration at round " + std::to_string(round));
    }
}

// --- 3. PCM linearity --------------------------------------------------------

void pcm_linearity(check_context& ctx) {
    std::mt19937_64 g(43);
    std::vector<std::size_t> sizes = {1, 2, 7, 10, 30};
    for (int i = 0; i < 25; ++i) sizes.push_back(1 + testgen::bounded(g, 60));
    for (std::size_t n : sizes) {
        similarity_table table = testgen::random_table(g, n);
        for (int pct = 0; pct <= 100 && ctx.failure.empty(); pct += 10) {
            filter_outcome out = apply_filter(table, {mechanism::pcm, static_cast<double>(pct) / 100.0});
            std::size_t expected = static_cast<std::size_t>(pct) * n / 100;
            ctx.require(nep(out, n).raw == expected,
                        "PCM nep_raw != floor(in*N) at N=" + std::to_string(n) + " in=" + std::to_string(pct) + "%");
        }
    }
}

// --- 4. monotone filtering ---------------------------------------------------

void monotone_filtering(check_context& ctx) {
    std::mt19937_64 g(44);
    for (int round = 0; round < 220 && ctx.failure.empty(); ++round) {
        similarity_table table = testgen::random_table(g, 1 + testgen::bounded(g, 30));
        double in1 = testgen::unit_real(g);
        double in2 = testgen::unit_real(g);
        if (in1 > in2) std::swap(in1, in2);
        for (mechanism mech : {mechanism::sm, mechanism::rm, mechanism::pcm}) {
            filter_outcome lo = apply_filter(table, {mech, in1});
            filter_outcome hi = apply_filter(table, {mech, in2});
            bool subset = std::includes(lo.passed.begin(), lo.passed.end(), hi.passed.begin(), hi.passed.end());
            ctx.require(subset, std::string("passed(in2) not within passed(in1) for ") +
                                    std::string(mechanism_name(mech)) + " at round " + std::to_string(round));
        }
    }
}

// --- 5. RANP sign behavior ---------------------------------------------------

void ranp_sign_behavior(check_context& ctx) {
    std::mt19937_64 g(45);
    for (int round = 0; round < 100 && ctx.failure.empty(); ++round) {
        similarity_table table = testgen::random_table(g, 1 + testgen::bounded(g, 25));
        long long baseline = anp_baseline(table);
        long long sum_ir = 0;
        for (const sim_entry& e : table.entries()) sum_ir += e.size_a + e.size_b;

        filter_outcome none;
        for (const sim_entry& e : table.entries()) none.passed.push_back(e.id);
        double got_none = ranp_pct(baseline, anp_filtered(table, none));
        double want_none = -100.0 * static_cast<double>(sum_ir) / static_cast<double>(baseline);
        ctx.require(std::abs(got_none - want_none) <= 1e-9, "no-exclusion RANP identity violated");

        filter_outcome all;
        for (const sim_entry& e : table.entries()) all.excluded.push_back(e.id);
        double got_all = ranp_pct(baseline, anp_filtered(table, all));
        double want_all = 100.0 * (1.0 - static_cast<double>(sum_ir) / static_cast<double>(baseline));
        ctx.require(std::abs(got_all - want_all) <= 1e-9, "full-exclusion RANP identity violated");
    }
}

// --- 6. DEP bounds and worst case --------------------------------------------

void dep_bounds(check_context& ctx) {
    for (std::size_t N = 2; N <= 6 && ctx.failure.empty(); ++N) {
        std::vector<std::size_t> perm(N);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<sim_entry> entries;
            for (std::size_t i = 0; i < N; ++i) {
                entries.push_back({{"p" + std::to_string(i), "q" + std::to_string(i)}, 1, 1,
                                   1.0 - 0.1 * static_cast<double>(i),
                                   1.0 - 0.1 * static_cast<double>(perm[i])});
            }
            similarity_table table{std::move(entries)};
            auto rank_ir = rank_pairs(table, perspective::ir);
            auto rank_sm = rank_pairs(table, perspective::sm);
            for (std::size_t mask = 0; mask < (1u << N) && ctx.failure.empty(); ++mask) {
                std::vector<pair_key> excluded;
                for (std::size_t i = 0; i < N; ++i)
                    if (mask & (1u << i)) excluded.push_back(table.entries()[i].id);
                long long n = static_cast<long long>(excluded.size());
                long long bound = n * (static_cast<long long>(N) - n);
                long long raw = dep(table, rank_ir, rank_sm, excluded).raw;
                ctx.require(raw >= -bound && raw <= bound, "DEP out of [-n(N-n), n(N-n)] at N=" + std::to_string(N));
            }
        } while (std::next_permutation(perm.begin(), perm.end()) && ctx.failure.empty());

        // worst case: excluded pairs are the bottom-n IR ranks and top-n SM ranks
        std::vector<sim_entry> entries;
        for (std::size_t i = 0; i < N; ++i) {
            entries.push_back({{"p" + std::to_string(i), "q" + std::to_string(i)}, 1, 1,
                               1.0 - 0.1 * static_cast<double>(i),
                               0.1 + 0.1 * static_cast<double>(i)});
        }
        similarity_table table{std::move(entries)};
        auto rank_ir = rank_pairs(table, perspective::ir);
        auto rank_sm = rank_pairs(table, perspective::sm);
        std::size_t n = N / 2;
        std::vector<pair_key> excluded;
        for (std::size_t i = N - n; i < N; ++i) excluded.push_back(table.entries()[i].id);
        dep_result worst = dep(table, rank_ir, rank_sm, excluded);
        long long expected = static_cast<long long>(n) * static_cast<long long>(N - n);
        ctx.require(worst.raw == expected, "worst-case DEP raw != n(N-n) at N=" + std::to_string(N));
        ctx.require(worst.normalized == 1.0, "worst-case DEP norm != 1.0 at N=" + std::to_string(N));
    }
}

// --- 7. clustered-distribution SM reproduction -------------------------------

void clustered_sm_reproduction(check_context& ctx) {
    token_sequence seed = tokenize(seed_programs[0].source, "stats.java");
    corpus c;
    c.dataset_id = "clustered";
    c.submissions.push_back(seed);
    for (int level = 1; level <= 4; ++level)
        for (auto& v : generate_variants(seed, level, 3, 42)) c.submissions.push_back(std::move(v));
    std::sort(c.submissions.begin(), c.submissions.end(),
              [](const token_sequence& a, const token_sequence& b) { return a.submission_id < b.submission_id; });

    similarity_table table = score_pairs(generate_pairs(c));
    ctx.require(table.sim_min() > 0.5,
                "synthetic corpus insufficiently clustered: sim_min=" + std::to_string(table.sim_min()));
    ctx.require(table.sim_min() < table.sim_max(), "degenerate similarity distribution");

    for (int i = 0; i <= 5; ++i) {
        filter_outcome out = apply_filter(table, {mechanism::sm, static_cast<double>(i) / 10.0});
        ctx.require(out.excluded.empty(), "SM excluded pairs at in=0." + std::to_string(i));
    }
    filter_outcome rm = apply_filter(table, {mechanism::rm, 0.3});
    ctx.require(!rm.excluded.empty(), "RM excluded nothing at in=0.3");
    filter_outcome pcm = apply_filter(table, {mechanism::pcm, 0.3});
    ctx.require(!pcm.excluded.empty(), "PCM excluded nothing at in=0.3");
}

// --- 8. correlation direction -------------------------------------------------

void correlation_direction(check_context& ctx) {
    corpus c;
    c.dataset_id = "corr";
    for (std::size_t t = 0; t < 2; ++t) {
        token_sequence seed = tokenize(seed_programs[t].source, std::string(seed_programs[t].name) + ".java");
        c.submissions.push_back(seed);
        for (int level = 1; level <= 6; ++level)
            for (auto& v : generate_variants(seed, level, 2, 77 + t)) c.submissions.push_back(std::move(v));
    }
    std::sort(c.submissions.begin(), c.submissions.end(),
              [](const token_sequence& a, const token_sequence& b) { return a.submission_id < b.submission_id; });
    ctx.require(c.size() >= 20, "corpus too small: " + std::to_string(c.size()));

    std::vector<comparison_pair> pairs = generate_pairs(c);
    similarity_table table = score_pairs(pairs);
    std::vector<double> xs, ys;
    for (const comparison_pair& p : pairs) {
        xs.push_back(table.find(p.id)->sim_ir);
        ys.push_back(rkrgst_similarity(*p.a, *p.b, 3).similarity);
    }
    double r = pearson(xs, ys);
    ctx.require(r >= 0.5, "pearson(sim_ir, sim_rkrgst) below 0.5: " + std::to_string(r));
}

// --- 9. cosine properties -----------------------------------------------------

void cosine_properties(check_context& ctx) {
    std::mt19937_64 g(49);
    for (int round = 0; round < 500 && ctx.failure.empty(); ++round) {
        token_sequence sa = testgen::random_sequence(g, 50, 10, "a");
        token_sequence sb = testgen::random_sequence(g, 50, 10, "b");
        term_vector u = term_frequency_vector(sa);
        term_vector v = term_frequency_vector(sb);

        ctx.require(cosine_similarity(u, v) == cosine_similarity(v, u), "cosine symmetry violated");

        std::uint32_t k = static_cast<std::uint32_t>(2 + testgen::bounded(g, 9));
        auto scaled = u.counts();
        for (auto& [kind, count] : scaled) count *= k;
        double diff = std::abs(cosine_similarity(term_vector(std::move(scaled)), v) - cosine_similarity(u, v));
        ctx.require(diff <= 1e-9, "cosine scale invariance violated");

        token_sequence shuffled = sa;
        std::shuffle(shuffled.tokens.begin(), shuffled.tokens.end(), g);
        ctx.require(term_frequency_vector(shuffled) == u, "term vector depends on token order");
    }
}

// --- 10. end-to-end determinism ------------------------------------------------

#ifndef TILEGUARD_CLI_PATH
#define TILEGUARD_CLI_PATH "tileguard"
#endif

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void end_to_end_determinism(check_context& ctx) {
    testgen::temp_dir dir("acc10");
    std::filesystem::path corpus_dir = dir.path / "corpus";
    std::filesystem::path out1 = dir.path / "sweep1.csv";
    std::filesystem::path out2 = dir.path / "sweep2.csv";

    std::string cli = TILEGUARD_CLI_PATH;
    auto run = [&](const std::string& args) {
        std::string cmd = cli + " " + args + " 2>/dev/null";
        return std::system(cmd.c_str());
    };

    int rc = run("synth --out " + corpus_dir.string() +
                 " --sub-datasets 2 --originals 2 --max-level 6 --per-level 1 --rng-seed 5");
    if (!ctx.require(rc == 0, "synth exited with " + std::to_string(rc))) return;
    rc = run("sweep --dataset " + corpus_dir.string() + " --matcher rkrgst --out " + out1.string());
    if (!ctx.require(rc == 0, "first sweep exited with " + std::to_string(rc))) return;
    rc = run("sweep --dataset " + corpus_dir.string() + " --matcher rkrgst --out " + out2.string());
    if (!ctx.require(rc == 0, "second sweep exited with " + std::to_string(rc))) return;

    std::string first = slurp(out1);
    std::string second = slurp(out2);
    ctx.require(!first.empty(), "sweep produced empty output");
    ctx.require(first == second, "sweep outputs differ between runs");
}

}  // namespace

int main() {
    std::vector<criterion> criteria = {
        {1, "paper worked examples (RM 55%, PCM 15 of 30)", 1.0, paper_worked_examples},
        {2, "matcher oracle equivalence", 60000.0, oracle_equivalence},
        {3, "PCM linearity: nep_raw == floor(in*N)", 1000.0, pcm_linearity},
        {4, "monotone filtering across mechanisms", 10000.0, monotone_filtering},
        {5, "RANP sign identities", 10000.0, ranp_sign_behavior},
        {6, "DEP bounds and worst case (N <= 6)", 5000.0, dep_bounds},
        {7, "clustered distribution: SM flat, RM/PCM active", 30000.0, clustered_sm_reproduction},
        {8, "IR vs RKRGST correlation direction", 120000.0, correlation_direction},
        {9, "cosine symmetry, scale and order invariance", 5000.0, cosine_properties},
        {10, "end-to-end sweep determinism via CLI", 120000.0, end_to_end_determinism},
    };

    int failures = 0;
    for (const criterion& c : criteria) {
        check_context ctx;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(ctx);
        } catch (const std::exception& e) {
            ctx.require(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_ms > 0 && ms > c.budget_ms)
            ctx.require(false, "runtime " + std::to_string(ms) + " ms exceeds budget " +
                                   std::to_string(c.budget_ms) + " ms");
        bool ok = ctx.failure.empty();
        failures += ok ? 0 : 1;
        std::printf("%s [%2d] %s (%.1f ms)\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), ms);
        if (!ok) std::printf("       -> %s\n", ctx.failure.c_str());
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
