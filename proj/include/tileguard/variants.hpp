#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tileguard/error.hpp"
#include "tileguard/token.hpp"

namespace tileguard {

struct empty_seed_error : error {
    using error::error;
};

struct invalid_level_error : error {
    using error::error;
};

// Levenshtein distance over token kinds (unit cost insert/delete/substitute).
inline std::size_t token_edit_distance(std::span<const token_kind> a, std::span<const token_kind> b) {
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<std::size_t> prev(a.size() + 1), cur(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) prev[i] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
        cur[0] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            std::size_t sub = prev[i - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[i] = std::min({prev[i] + 1, cur[i - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[a.size()];
}

inline std::size_t token_edit_distance(const token_sequence& a, const token_sequence& b) {
    const std::vector<token_kind> ka = kinds_of(a);
    const std::vector<token_kind> kb = kinds_of(b);
    return token_edit_distance(ka, kb);
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Bounded draw via modulo; mt19937_64 output is standard-specified, which
// keeps variant generation reproducible across toolchains.
inline std::size_t bounded(std::mt19937_64& g, std::size_t n) {
    return static_cast<std::size_t>(g() % n);
}

inline token_kind random_kind(std::mt19937_64& g) {
    return static_cast<token_kind>(bounded(g, token_kind_count));
}

inline constexpr token_kind literal_kinds[] = {
    token_kind::int_lit,  token_kind::float_lit, token_kind::string_lit,
    token_kind::char_lit, token_kind::bool_lit,  token_kind::null_lit,
};

inline void substitute_token(std::vector<token_kind>& k, std::mt19937_64& g) {
    std::size_t pos = bounded(g, k.size());
    token_kind nk = random_kind(g);
    if (nk == k[pos]) nk = static_cast<token_kind>((static_cast<std::size_t>(nk) + 1) % token_kind_count);
    k[pos] = nk;
}

inline bool swap_literal(std::vector<token_kind>& k, std::mt19937_64& g) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (is_literal_kind(k[i])) spots.push_back(i);
    if (spots.empty()) return false;
    std::size_t pos = spots[bounded(g, spots.size())];
    auto cur = std::find(std::begin(literal_kinds), std::end(literal_kinds), k[pos]) - std::begin(literal_kinds);
    k[pos] = literal_kinds[(static_cast<std::size_t>(cur) + 1 + bounded(g, 5)) % 6];
    return true;
}

// Semicolon-terminated runs, used as approximate statement boundaries.
inline std::vector<std::pair<std::size_t, std::size_t>> statement_segments(const std::vector<token_kind>& k) {
    std::vector<std::pair<std::size_t, std::size_t>> segs;
    std::size_t start = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == token_kind::semi) {
            segs.emplace_back(start, i + 1);
            start = i + 1;
        }
    }
    return segs;
}

inline bool reorder_statements(std::vector<token_kind>& k, std::mt19937_64& g) {
    auto segs = statement_segments(k);
    if (segs.size() < 2) return false;
    std::size_t i = bounded(g, segs.size() - 1);
    auto [s1, e1] = segs[i];
    auto [s2, e2] = segs[i + 1];
    std::vector<token_kind> out;
    out.reserve(k.size());
    out.insert(out.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(s1));
    out.insert(out.end(), k.begin() + static_cast<std::ptrdiff_t>(s2), k.begin() + static_cast<std::ptrdiff_t>(e2));
    out.insert(out.end(), k.begin() + static_cast<std::ptrdiff_t>(s1), k.begin() + static_cast<std::ptrdiff_t>(e1));
    out.insert(out.end(), k.begin() + static_cast<std::ptrdiff_t>(e2), k.end());
    k = std::move(out);
    return true;
}

inline void insert_dead_tokens(std::vector<token_kind>& k, std::mt19937_64& g) {
    using tk = token_kind;
    static const std::vector<std::vector<tk>> patterns = {
        {tk::kw_int, tk::ident, tk::assign, tk::int_lit, tk::semi},
        {tk::ident, tk::assign, tk::ident, tk::plus, tk::int_lit, tk::semi},
        {tk::kw_if, tk::lparen, tk::bool_lit, tk::rparen, tk::lbrace, tk::rbrace},
        {tk::kw_long, tk::ident, tk::assign, tk::ident, tk::star, tk::int_lit, tk::semi},
    };
    const auto& pat = patterns[bounded(g, patterns.size())];
    auto segs = statement_segments(k);
    std::size_t at = segs.empty() ? k.size() : segs[bounded(g, segs.size())].second;
    k.insert(k.begin() + static_cast<std::ptrdiff_t>(at), pat.begin(), pat.end());
}

inline bool delete_run(std::vector<token_kind>& k, std::mt19937_64& g) {
    if (k.size() < 3) return false;
    std::size_t len = 1 + bounded(g, 3);
    len = std::min(len, k.size() - 1);
    std::size_t pos = bounded(g, k.size() - len + 1);
    k.erase(k.begin() + static_cast<std::ptrdiff_t>(pos), k.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return true;
}

enum class edit_op { literal_swap, reorder, dead_insert, small_delete, substitute };

inline void apply_edit(std::vector<token_kind>& k, std::mt19937_64& g, edit_op op) {
    switch (op) {
        case edit_op::literal_swap:
            if (!swap_literal(k, g)) substitute_token(k, g);
            return;
        case edit_op::reorder:
            if (!reorder_statements(k, g)) substitute_token(k, g);
            return;
        case edit_op::dead_insert: insert_dead_tokens(k, g); return;
        case edit_op::small_delete:
            if (!delete_run(k, g)) substitute_token(k, g);
            return;
        case edit_op::substitute: substitute_token(k, g); return;
    }
}

inline token_sequence sequence_from_kinds(std::string id, const std::vector<token_kind>& kinds) {
    token_sequence seq{std::move(id), {}};
    seq.tokens.reserve(kinds.size());
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        seq.tokens.push_back({kinds[i], static_cast<int>(i / 16) + 1, static_cast<int>(i % 16) + 1});
    }
    return seq;
}

inline std::string variant_id(const std::string& base, int level, std::size_t index) {
    std::string suffix = "_l" + std::to_string(level) + "_v" + std::to_string(index + 1);
    constexpr std::string_view ext = ".java";
    if (base.size() > ext.size() && base.ends_with(ext))
        return base.substr(0, base.size() - ext.size()) + suffix + std::string(ext);
    return base + suffix;
}

}  // namespace detail

// Produce `count` plagiarized variants of `seed` at the given attack level.
// Level 1 edits are invisible at the token-kind level (pure comment and
// whitespace attacks), levels 2-5 apply progressively heavier token edits,
// level 6 rewrites at least 30% of the sequence (measured by token edit
// distance). Deterministic for a fixed rng_seed.
inline std::vector<token_sequence> generate_variants(const token_sequence& seed, int level, std::size_t count,
                                                     std::uint64_t rng_seed) {
    if (seed.empty()) throw empty_seed_error("variant seed must be non-empty");
    if (level < 1 || level > 6) throw invalid_level_error("attack level must be in 1..6, got " + std::to_string(level));
    if (count == 0) throw error("variant count must be positive");

    const std::vector<token_kind> base = kinds_of(seed);
    const std::size_t n = base.size();

    using detail::edit_op;
    std::vector<edit_op> ops;
    std::size_t budget = 0;
    switch (level) {
        case 1: break;
        case 2:
            ops = {edit_op::literal_swap};
            budget = std::max<std::size_t>(1, n / 50);
            break;
        case 3:
            ops = {edit_op::literal_swap, edit_op::reorder};
            budget = std::max<std::size_t>(2, n / 20);
            break;
        case 4:
            ops = {edit_op::literal_swap, edit_op::reorder, edit_op::dead_insert};
            budget = std::max<std::size_t>(3, n / 11);
            break;
        case 5:
            ops = {edit_op::literal_swap, edit_op::reorder, edit_op::dead_insert, edit_op::small_delete};
            budget = std::max<std::size_t>(4, n / 7);
            break;
        case 6:
            ops = {edit_op::literal_swap, edit_op::reorder, edit_op::dead_insert, edit_op::small_delete,
                   edit_op::substitute};
            budget = std::max<std::size_t>(5, 2 * n / 5);
            break;
    }

    std::vector<token_sequence> variants;
    variants.reserve(count);
    for (std::size_t v = 0; v < count; ++v) {
        std::mt19937_64 g(detail::splitmix64(detail::splitmix64(rng_seed) ^
                                             (static_cast<std::uint64_t>(level) << 32 ^ v)));
        std::vector<token_kind> k = base;
        for (std::size_t e = 0; e < budget; ++e) {
            detail::apply_edit(k, g, ops[detail::bounded(g, ops.size())]);
        }
        if (level == 6) {
            const std::size_t target = (3 * n + 9) / 10;  // ceil(0.3 n)
            int rounds = 0;
            while (token_edit_distance(std::span(base), std::span(k)) < target) {
                if (++rounds > 100) {
                    // Distance grows with length difference, so padding always converges.
                    while (k.size() < n + target) k.push_back(detail::random_kind(g));
                    continue;
                }
                for (std::size_t e = 0; e < std::max<std::size_t>(1, n / 20); ++e) detail::substitute_token(k, g);
            }
        }
        variants.push_back(detail::sequence_from_kinds(detail::variant_id(seed.submission_id, level, v), k));
    }
    return variants;
}

// Render a kind sequence as lexable Java-shaped text: canonical lexemes joined
// by spaces, 16 tokens per line. tokenize(render(k)) yields exactly k.
inline std::string render_java(std::span<const token_kind> kinds) {
    std::string out;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        out += kind_lexeme(kinds[i]);
        out += (i + 1) % 16 == 0 ? '\n' : ' ';
    }
    if (!out.empty() && out.back() == ' ') out.back() = '\n';
    return out;
}

inline std::string render_java(const token_sequence& seq) {
    const std::vector<token_kind> ks = kinds_of(seq);
    return render_java(std::span<const token_kind>(ks));
}

}  // namespace tileguard
