#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tileguard/error.hpp"
#include "tileguard/lexer.hpp"
#include "tileguard/parallel.hpp"
#include "tileguard/token.hpp"

namespace tileguard {

struct empty_dataset_error : error {
    using error::error;
};

struct too_few_submissions_error : error {
    using error::error;
};

// A loaded dataset: submissions sorted by id, ids unique.
struct corpus {
    std::string dataset_id;
    std::vector<token_sequence> submissions;

    std::size_t size() const { return submissions.size(); }
};

// Unordered pair identity: lexicographically smaller id first.
struct pair_key {
    std::string first;
    std::string second;

    auto operator<=>(const pair_key&) const = default;
};

inline pair_key make_pair_key(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

struct comparison_pair {
    pair_key id;
    const token_sequence* a;  // non-owning; the corpus outlives its pairs
    const token_sequence* b;
};

struct load_options {
    bool fail_on_lex_error = false;
    unsigned threads = 1;
    std::vector<std::string>* warnings = nullptr;  // optional sink for skip messages
};

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw io_error("cannot open " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("failed reading " + p.string());
    return std::move(buf).str();
}

inline std::string relative_id(const std::filesystem::path& file, const std::filesystem::path& root) {
    return file.lexically_relative(root).generic_string();
}

}  // namespace detail

// Load every `.java` file under `root` (recursively) as one submission each.
// Files that fail to read or lex are skipped with a warning unless
// fail_on_lex_error is set. Submission ids are root-relative paths.
inline corpus load_dataset(const std::filesystem::path& root, const load_options& options = {}) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) throw io_error("dataset directory not found: " + root.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<token_sequence> lexed(files.size());
    std::vector<std::string> skipped(files.size());
    parallel_for(files.size(), options.threads, [&](std::size_t i) {
        std::string id = detail::relative_id(files[i], root);
        try {
            lexed[i] = tokenize(detail::read_file(files[i]), id);
        } catch (const lex_error& e) {
            if (options.fail_on_lex_error) throw;
            skipped[i] = "skipping " + id + ": " + e.what();
        } catch (const io_error& e) {
            skipped[i] = std::string("skipping unreadable file: ") + e.what();
        }
    });

    corpus c;
    c.dataset_id = root.filename().string();
    if (c.dataset_id.empty()) c.dataset_id = root.string();
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (!skipped[i].empty()) {
            if (options.warnings) options.warnings->push_back(skipped[i]);
            continue;
        }
        c.submissions.push_back(std::move(lexed[i]));
    }
    std::sort(c.submissions.begin(), c.submissions.end(),
              [](const token_sequence& a, const token_sequence& b) { return a.submission_id < b.submission_id; });

    if (c.submissions.empty()) throw empty_dataset_error("no loadable .java files in " + root.string());
    return c;
}

// All n(n-1)/2 unordered pairs in lexicographic id order.
inline std::vector<comparison_pair> generate_pairs(const corpus& c) {
    if (c.size() < 2)
        throw too_few_submissions_error("need at least 2 submissions, have " + std::to_string(c.size()));
    std::vector<comparison_pair> pairs;
    pairs.reserve(c.size() * (c.size() - 1) / 2);
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const token_sequence& a = c.submissions[i];
            const token_sequence& b = c.submissions[j];
            pairs.push_back({{a.submission_id, b.submission_id}, &a, &b});
        }
    }
    return pairs;
}

struct dataset_stats {
    std::string id;
    std::size_t submissions = 0;
    std::size_t min_tokens = 0;
    std::size_t max_tokens = 0;
    double avg_tokens = 0.0;
    std::size_t pair_count = 0;
};

inline dataset_stats compute_stats(const corpus& c) {
    dataset_stats s;
    s.id = c.dataset_id;
    s.submissions = c.size();
    if (c.size() == 0) return s;
    s.min_tokens = c.submissions.front().size();
    s.max_tokens = s.min_tokens;
    std::size_t total = 0;
    for (const token_sequence& seq : c.submissions) {
        s.min_tokens = std::min(s.min_tokens, seq.size());
        s.max_tokens = std::max(s.max_tokens, seq.size());
        total += seq.size();
    }
    s.avg_tokens = static_cast<double>(total) / static_cast<double>(c.size());
    s.pair_count = c.size() * (c.size() - 1) / 2;
    return s;
}

}  // namespace tileguard
