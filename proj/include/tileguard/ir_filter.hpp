#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tileguard/corpus.hpp"
#include "tileguard/error.hpp"
#include "tileguard/parallel.hpp"
#include "tileguard/token.hpp"

namespace tileguard {

// Sparse term-frequency vector over the token-kind vocabulary. Entries are
// sorted by kind and zero counts are never stored; the Euclidean norm is
// cached at construction.
class term_vector {
  public:
    term_vector() = default;

    explicit term_vector(std::vector<std::pair<token_kind, std::uint32_t>> counts) : counts_(std::move(counts)) {
        std::sort(counts_.begin(), counts_.end());
        std::erase_if(counts_, [](const auto& e) { return e.second == 0; });
        double sq = 0.0;
        for (const auto& [kind, count] : counts_) sq += static_cast<double>(count) * count;
        norm_ = std::sqrt(sq);
    }

    const std::vector<std::pair<token_kind, std::uint32_t>>& counts() const { return counts_; }
    double norm() const { return norm_; }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [kind, count] : counts_) t += count;
        return t;
    }

    bool operator==(const term_vector& other) const { return counts_ == other.counts_; }

  private:
    std::vector<std::pair<token_kind, std::uint32_t>> counts_;
    double norm_ = 0.0;
};

// counts[k] = occurrences of kind k; order of tokens is irrelevant.
inline term_vector term_frequency_vector(const token_sequence& seq) {
    std::array<std::uint32_t, token_kind_count> dense{};
    for (const token& t : seq.tokens) ++dense[static_cast<std::size_t>(t.kind)];
    std::vector<std::pair<token_kind, std::uint32_t>> counts;
    for (std::size_t i = 0; i < token_kind_count; ++i)
        if (dense[i] != 0) counts.emplace_back(static_cast<token_kind>(i), dense[i]);
    return term_vector(std::move(counts));
}

// dot(u,v) / (|u||v|), 0 when either vector is empty. Counts are nonnegative
// so the result lies in [0,1]; clamped against rounding spill. Equal vectors
// short-circuit to exactly 1 (sqrt(x)*sqrt(x) need not reproduce x).
inline double cosine_similarity(const term_vector& u, const term_vector& v) {
    if (u.norm() == 0.0 || v.norm() == 0.0) return 0.0;
    if (u == v) return 1.0;
    double dot = 0.0;
    auto iu = u.counts().begin();
    auto iv = v.counts().begin();
    while (iu != u.counts().end() && iv != v.counts().end()) {
        if (iu->first < iv->first) {
            ++iu;
        } else if (iv->first < iu->first) {
            ++iv;
        } else {
            dot += static_cast<double>(iu->second) * static_cast<double>(iv->second);
            ++iu;
            ++iv;
        }
    }
    return std::clamp(dot / (u.norm() * v.norm()), 0.0, 1.0);
}

struct sim_entry {
    pair_key id;
    std::uint32_t size_a = 0;  // |p_a|: token count of the lexicographically first submission
    std::uint32_t size_b = 0;
    double sim_ir = 0.0;
    std::optional<double> sim_sm;  // only present once a string matcher ran on the pair
};

// Per-pair similarity degrees, sorted by pair id.
class similarity_table {
  public:
    similarity_table() = default;

    explicit similarity_table(std::vector<sim_entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const sim_entry& a, const sim_entry& b) { return a.id < b.id; });
    }

    const std::vector<sim_entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const sim_entry* find(const pair_key& id) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                                   [](const sim_entry& e, const pair_key& k) { return e.id < k; });
        return it != entries_.end() && it->id == id ? &*it : nullptr;
    }

    std::size_t index_of(const pair_key& id) const {
        const sim_entry* e = find(id);
        if (e == nullptr) throw error("pair not present in similarity table");
        return static_cast<std::size_t>(e - entries_.data());
    }

    void set_sm(std::size_t index, double value) { entries_.at(index).sim_sm = value; }

    double sim_min() const {
        double m = 1.0;
        for (const sim_entry& e : entries_) m = std::min(m, e.sim_ir);
        return entries_.empty() ? 0.0 : m;
    }

    double sim_max() const {
        double m = 0.0;
        for (const sim_entry& e : entries_) m = std::max(m, e.sim_ir);
        return m;
    }

  private:
    std::vector<sim_entry> entries_;
};

// Phase 3: IR-based similarity degree for every comparison pair. Term vectors
// are built once per distinct submission.
inline similarity_table score_pairs(const std::vector<comparison_pair>& pairs, unsigned threads = 1) {
    if (pairs.empty()) throw error("score_pairs: no pairs to score");

    std::unordered_map<const token_sequence*, term_vector> vectors;
    for (const comparison_pair& p : pairs) {
        vectors.try_emplace(p.a);
        vectors.try_emplace(p.b);
    }
    {
        std::vector<const token_sequence*> seqs;
        seqs.reserve(vectors.size());
        for (auto& [seq, vec] : vectors) seqs.push_back(seq);
        std::sort(seqs.begin(), seqs.end(),
                  [](const token_sequence* a, const token_sequence* b) { return a->submission_id < b->submission_id; });
        parallel_for(seqs.size(), threads,
                     [&](std::size_t i) { vectors.at(seqs[i]) = term_frequency_vector(*seqs[i]); });
    }

    std::vector<sim_entry> entries(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) {
        const comparison_pair& p = pairs[i];
        entries[i] = {p.id, static_cast<std::uint32_t>(p.a->size()), static_cast<std::uint32_t>(p.b->size()),
                      cosine_similarity(vectors.at(p.a), vectors.at(p.b)), std::nullopt};
    });
    return similarity_table(std::move(entries));
}

}  // namespace tileguard
