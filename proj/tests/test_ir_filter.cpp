#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "support/generators.hpp"
#include "tileguard/ir_filter.hpp"
#include "tileguard/lexer.hpp"

using namespace tileguard;
using tk = token_kind;

namespace {

token_sequence seq_of(std::vector<tk> kinds, std::string id = "s") {
    token_sequence s{std::move(id), {}};
    int col = 1;
    for (tk k : kinds) s.tokens.push_back({k, 1, col++});
    return s;
}

}  // namespace

TEST_CASE("term_frequency_vector counts token kinds") {
    term_vector v = term_frequency_vector(seq_of({tk::kw_int, tk::ident, tk::ident}));
    REQUIRE(v.counts().size() == 2);
    CHECK(v.counts()[0] == std::pair{tk::kw_int, 1u});
    CHECK(v.counts()[1] == std::pair{tk::ident, 2u});
    CHECK(v.total() == 3);
    CHECK(v.norm() == Catch::Approx(std::sqrt(5.0)));

    term_vector empty = term_frequency_vector(seq_of({}));
    CHECK(empty.counts().empty());
    CHECK(empty.norm() == 0.0);
}

TEST_CASE("term vector conservation and norm invariants") {
    std::mt19937_64 g(7);
    for (int i = 0; i < 100; ++i) {
        token_sequence s = testgen::random_sequence(g, 60, 12);
        term_vector v = term_frequency_vector(s);
        CHECK(v.total() == s.size());
        double sq = 0.0;
        for (auto [kind, count] : v.counts()) {
            CHECK(count > 0);  // no zero entries stored
            sq += static_cast<double>(count) * count;
        }
        if (sq > 0.0) CHECK(std::abs(v.norm() * v.norm() - sq) / sq < 1e-9);
    }
}

TEST_CASE("cosine similarity on the worked cases") {
    term_vector xy(std::vector<std::pair<tk, std::uint32_t>>{{tk::ident, 1}, {tk::int_lit, 1}});
    term_vector x(std::vector<std::pair<tk, std::uint32_t>>{{tk::ident, 1}});
    term_vector z(std::vector<std::pair<tk, std::uint32_t>>{{tk::semi, 4}});

    CHECK(std::abs(cosine_similarity(xy, x) - 0.7071) < 1e-4);
    CHECK(cosine_similarity(x, z) == 0.0);  // disjoint kinds
    CHECK(cosine_similarity(xy, xy) == 1.0);
    CHECK(cosine_similarity(term_vector{}, xy) == 0.0);
    CHECK(cosine_similarity(term_vector{}, term_vector{}) == 0.0);
}

TEST_CASE("cosine symmetry is exact and range holds") {
    std::mt19937_64 g(11);
    for (int i = 0; i < 300; ++i) {
        term_vector u = term_frequency_vector(testgen::random_sequence(g, 40, 10));
        term_vector v = term_frequency_vector(testgen::random_sequence(g, 40, 10));
        double uv = cosine_similarity(u, v);
        double vu = cosine_similarity(v, u);
        CHECK(uv == vu);
        CHECK(uv >= 0.0);
        CHECK(uv <= 1.0);
    }
}

TEST_CASE("cosine scale invariance within 1e-9") {
    std::mt19937_64 g(13);
    for (int i = 0; i < 200; ++i) {
        term_vector u = term_frequency_vector(testgen::random_sequence(g, 40, 10));
        term_vector v = term_frequency_vector(testgen::random_sequence(g, 40, 10));
        std::uint32_t k = static_cast<std::uint32_t>(2 + testgen::bounded(g, 9));
        auto scaled_counts = u.counts();
        for (auto& [kind, count] : scaled_counts) count *= k;
        term_vector scaled(std::move(scaled_counts));
        CHECK(std::abs(cosine_similarity(scaled, v) - cosine_similarity(u, v)) < 1e-9);
    }
}

TEST_CASE("term vectors are order-insensitive") {
    std::mt19937_64 g(17);
    for (int i = 0; i < 200; ++i) {
        token_sequence s = testgen::random_sequence(g, 50, 8);
        token_sequence shuffled = s;
        std::shuffle(shuffled.tokens.begin(), shuffled.tokens.end(), g);
        CHECK(term_frequency_vector(s) == term_frequency_vector(shuffled));
    }
}

TEST_CASE("score_pairs computes sim_ir for every pair") {
    corpus c;
    c.dataset_id = "d";
    c.submissions.push_back(seq_of({tk::kw_int, tk::ident, tk::semi}, "a.java"));
    c.submissions.push_back(seq_of({tk::kw_int, tk::ident, tk::semi}, "b.java"));       // duplicate of a
    c.submissions.push_back(seq_of({tk::ident, tk::semi, tk::kw_int}, "c.java"));       // permutation of a
    c.submissions.push_back(seq_of({tk::string_lit, tk::string_lit}, "d.java"));        // disjoint kinds

    similarity_table table = score_pairs(generate_pairs(c));
    REQUIRE(table.size() == 6);

    CHECK(table.find({"a.java", "b.java"})->sim_ir == 1.0);  // identical submissions
    CHECK(table.find({"a.java", "c.java"})->sim_ir == 1.0);  // bag of tokens ignores order
    CHECK(table.find({"a.java", "d.java"})->sim_ir == 0.0);
    CHECK(table.find({"a.java", "b.java"})->size_a == 3);
    CHECK(table.find({"a.java", "b.java"})->sim_sm.has_value() == false);

    // entries sorted by id
    for (std::size_t i = 1; i < table.size(); ++i) CHECK(table.entries()[i - 1].id < table.entries()[i].id);

    CHECK_THROWS_AS(score_pairs({}), error);
}

TEST_CASE("similarity table extrema") {
    std::vector<sim_entry> entries{
        {{"a", "b"}, 1, 1, 0.3, std::nullopt},
        {{"a", "c"}, 1, 1, 0.8, std::nullopt},
        {{"b", "c"}, 1, 1, 0.5, std::nullopt},
    };
    similarity_table table(std::move(entries));
    CHECK(table.sim_min() == 0.3);
    CHECK(table.sim_max() == 0.8);

    CHECK(similarity_table{}.sim_min() == 0.0);
    CHECK(similarity_table{}.sim_max() == 0.0);
}

TEST_CASE("scoring is thread-count independent") {
    std::mt19937_64 g(23);
    corpus c;
    c.dataset_id = "par";
    for (int i = 0; i < 12; ++i)
        c.submissions.push_back(testgen::random_sequence(g, 80, 10, "f" + std::to_string(i) + ".java"));
    std::sort(c.submissions.begin(), c.submissions.end(),
              [](const token_sequence& a, const token_sequence& b) { return a.submission_id < b.submission_id; });

    auto pairs = generate_pairs(c);
    similarity_table serial = score_pairs(pairs, 1);
    similarity_table parallel = score_pairs(pairs, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial.entries()[i].id == parallel.entries()[i].id);
        CHECK(serial.entries()[i].sim_ir == parallel.entries()[i].sim_ir);
    }
}
