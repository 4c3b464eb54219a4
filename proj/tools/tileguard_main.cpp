// tileguard command line: detect / sweep / stats / synth / lex.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tileguard/tileguard.hpp"

namespace {

using namespace tileguard;

// Accepts a fraction ("0.55") or a percentage ("55%").
double parse_threshold(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    bool percent = !s.empty() && s.back() == '%';
    if (percent) s.pop_back();
    double v = 0.0;
    std::size_t used = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != s.size()) throw CLI::ValidationError("--threshold", "not a number: " + text);
    if (percent) v /= 100.0;
    if (v < 0.0 || v > 1.0)
        throw CLI::ValidationError("--threshold", "must be in [0,1] or [0%,100%]: " + text);
    return v;
}

la_scoring parse_la_scoring(const std::string& text) {
    la_scoring sc;
    if (std::sscanf(text.c_str(), "%d,%d,%d", &sc.match, &sc.mismatch, &sc.gap) != 3)
        throw CLI::ValidationError("--la-scoring", "expected match,mismatch,gap (e.g. 2,-1,-1): " + text);
    return sc;
}

mechanism parse_mechanism(const std::string& s) {
    if (s == "sm") return mechanism::sm;
    if (s == "rm") return mechanism::rm;
    if (s == "pcm") return mechanism::pcm;
    throw CLI::ValidationError("--mechanism", "expected sm|rm|pcm, got " + s);
}

matcher_kind parse_matcher(const std::string& s) {
    if (s == "rkrgst") return matcher_kind::rkrgst;
    if (s == "la") return matcher_kind::la;
    throw CLI::ValidationError("--matcher", "expected rkrgst|la, got " + s);
}

report_format parse_format(const std::string& s) {
    if (s == "csv") return report_format::csv;
    if (s == "json") return report_format::json;
    throw CLI::ValidationError("--format", "expected csv|json, got " + s);
}

// "-" means stdout.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file " + path);
    writer(out);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

struct detect_args {
    std::string dataset;
    std::string mechanism_name = "sm";
    std::string threshold = "0";
    std::string matcher = "rkrgst";
    std::size_t mml = 3;
    std::string la = "2,-1,-1";
    std::string out = "-";
    std::string format = "csv";
    std::string dump_ir;
    bool fail_on_lex_error = false;
};

int cmd_detect(const detect_args& a) {
    run_config cfg;
    cfg.dataset_root = a.dataset;
    cfg.scenario.mech = parse_mechanism(a.mechanism_name);
    cfg.scenario.raw_threshold = parse_threshold(a.threshold);
    cfg.scenario.matcher = parse_matcher(a.matcher);
    cfg.scenario.mml = a.mml;
    cfg.scenario.scoring = parse_la_scoring(a.la);
    cfg.fail_on_lex_error = a.fail_on_lex_error;
    cfg.threads = threads_from_env();
    std::vector<std::string> warnings;
    cfg.warnings = &warnings;

    detection_report report = run_detect(cfg);
    print_warnings(warnings);
    report_format fmt = parse_format(a.format);
    write_output(a.out, [&](std::ostream& os) {
        fmt == report_format::csv ? write_detection_csv(report, os) : write_detection_json(report, os);
    });
    if (!a.dump_ir.empty()) write_output(a.dump_ir, [&](std::ostream& os) { write_ir_csv(report, os); });
    return 0;
}

struct sweep_args {
    std::string dataset;
    std::string matcher = "rkrgst";
    std::size_t mml = 3;
    std::string la = "2,-1,-1";
    std::string out = "-";
    std::string format = "csv";
    bool fail_on_lex_error = false;
};

int cmd_sweep(const sweep_args& a) {
    sweep_config cfg;
    cfg.dataset_root = a.dataset;
    cfg.matcher = parse_matcher(a.matcher);
    cfg.mml = a.mml;
    cfg.scoring = parse_la_scoring(a.la);
    cfg.fail_on_lex_error = a.fail_on_lex_error;
    cfg.threads = threads_from_env();
    std::vector<std::string> warnings;
    cfg.warnings = &warnings;

    sweep_result result = run_sweep(cfg);
    print_warnings(warnings);
    report_format fmt = parse_format(a.format);
    write_output(a.out, [&](std::ostream& os) {
        fmt == report_format::csv ? write_sweep_csv(result, os) : write_sweep_json(result, os);
    });

    // IR vs string-matching correlation, per sub-dataset and both aggregates.
    std::cerr << "pearson correlation (sim_ir vs sim_sm):\n";
    for (const auto& [id, r] : result.correlation.per_subdataset)
        std::cerr << "  " << id << ": " << (r ? std::to_string(*r) : "n/a") << '\n';
    if (result.correlation.averaged)
        std::cerr << "  averaged over sub-datasets: " << *result.correlation.averaged << '\n';
    if (result.correlation.pooled) std::cerr << "  pooled over all pairs: " << *result.correlation.pooled << '\n';
    return 0;
}

int cmd_stats(const std::string& dataset, const std::string& out) {
    std::vector<dataset_stats> stats;
    std::vector<std::string> warnings;
    for (const auto& sub : subdataset_roots(dataset)) {
        stats.push_back(compute_stats(load_dataset(sub, {false, threads_from_env(), &warnings})));
    }
    print_warnings(warnings);
    write_output(out, [&](std::ostream& os) { write_stats_csv(stats, os); });
    return 0;
}

struct synth_args {
    std::string out;
    std::size_t subdatasets = 1;
    std::size_t originals = 2;
    int max_level = 6;
    std::size_t per_level = 2;
    std::uint64_t rng_seed = 42;
};

int cmd_synth(const synth_args& a) {
    synthesize_corpus({a.out, a.subdatasets, a.originals, a.max_level, a.per_level, a.rng_seed});
    std::cerr << "wrote synthetic corpus to " << a.out << '\n';
    return 0;
}

int cmd_lex(const std::string& file, bool dump_tokens) {
    token_sequence seq = tokenize(detail::read_file(file), file);
    if (dump_tokens) {
        for (const token& t : seq.tokens) std::cout << kind_name(t.kind) << '\n';
    } else {
        std::cout << file << ": " << seq.size() << " tokens\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tileguard: token-based source code plagiarism detection for Java\n"
                 "IR-prefiltered string matching with static, range-based, and\n"
                 "pair-count-based thresholding"};
    app.require_subcommand(1);

    detect_args da;
    CLI::App* detect = app.add_subcommand("detect", "run the four-phase detection pipeline on one dataset");
    detect->add_option("--dataset", da.dataset, "dataset directory (.java files, recursive)")->required();
    detect->add_option("--mechanism", da.mechanism_name, "thresholding mechanism: sm|rm|pcm");
    detect->add_option("--threshold", da.threshold, "raw threshold, fraction or percentage (0.3 or 30%)");
    detect->add_option("--matcher", da.matcher, "string matcher: rkrgst|la");
    detect->add_option("--mml", da.mml, "minimum match length for rkrgst");
    detect->add_option("--la-scoring", da.la, "local alignment scoring match,mismatch,gap");
    detect->add_option("--out", da.out, "output path, - for stdout");
    detect->add_option("--format", da.format, "output format: csv|json");
    detect->add_option("--dump-ir", da.dump_ir, "also write per-pair IR similarity CSV to this path");
    detect->add_flag("--fail-on-lex-error", da.fail_on_lex_error, "abort instead of skipping unlexable files");

    sweep_args sa;
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate all 33 scenarios (sm/rm/pcm x 0%..100%)");
    sweep->add_option("--dataset", sa.dataset, "dataset root; immediate subdirectories are sub-datasets")->required();
    sweep->add_option("--matcher", sa.matcher, "string matcher: rkrgst|la");
    sweep->add_option("--mml", sa.mml, "minimum match length for rkrgst");
    sweep->add_option("--la-scoring", sa.la, "local alignment scoring match,mismatch,gap");
    sweep->add_option("--out", sa.out, "output path, - for stdout");
    sweep->add_option("--format", sa.format, "output format: csv|json");
    sweep->add_flag("--fail-on-lex-error", sa.fail_on_lex_error, "abort instead of skipping unlexable files");

    std::string stats_dataset, stats_out = "-";
    CLI::App* stats = app.add_subcommand("stats", "per-sub-dataset token statistics as CSV");
    stats->add_option("--dataset", stats_dataset, "dataset root")->required();
    stats->add_option("--out", stats_out, "output path, - for stdout");

    synth_args ya;
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic plagiarism corpus");
    synth->add_option("--out", ya.out, "output root directory")->required();
    synth->add_option("--sub-datasets", ya.subdatasets, "number of sub-datasets");
    synth->add_option("--originals", ya.originals, "original programs per sub-dataset");
    synth->add_option("--max-level", ya.max_level, "generate attack levels 1..N (N in 1..6)");
    synth->add_option("--per-level", ya.per_level, "variants per (original, level)");
    synth->add_option("--rng-seed", ya.rng_seed, "deterministic generation seed");

    std::string lex_file;
    bool lex_dump = false;
    CLI::App* lex = app.add_subcommand("lex", "tokenize a single .java file");
    lex->add_option("file", lex_file, "Java source file")->required();
    lex->add_flag("--dump-tokens", lex_dump, "print one token kind per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*detect) return cmd_detect(da);
        if (*sweep) return cmd_sweep(sa);
        if (*stats) return cmd_stats(stats_dataset, stats_out);
        if (*synth) return cmd_synth(ya);
        if (*lex) return cmd_lex(lex_file, lex_dump);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const empty_dataset_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const too_few_submissions_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lex_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
