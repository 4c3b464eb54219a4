#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "support/temp_dir.hpp"
#include "tileguard/corpus.hpp"
#include "tileguard/seed_programs.hpp"
#include "tileguard/variants.hpp"

using namespace tileguard;

namespace {

// In-memory corpus of trivially distinct one-token submissions.
corpus tiny_corpus(std::size_t n) {
    corpus c;
    c.dataset_id = "tiny";
    for (std::size_t i = 0; i < n; ++i) {
        std::string id = "s" + std::to_string(i);
        id.insert(1, 3 - std::min<std::size_t>(3, id.size() - 1), '0');
        c.submissions.push_back({id, {{token_kind::ident, 1, 1}}});
    }
    return c;
}

}  // namespace

TEST_CASE("load_dataset lexes every java file under the root") {
    testgen::temp_dir dir("corpus");
    dir.write("B.java", "class B {}");
    dir.write("A.java", "class A { int x = 1; }");
    dir.write("nested/C.java", "class C {}");
    dir.write("README.txt", "not java");

    corpus c = load_dataset(dir.path);
    REQUIRE(c.size() == 3);
    CHECK(c.submissions[0].submission_id == "A.java");
    CHECK(c.submissions[1].submission_id == "B.java");
    CHECK(c.submissions[2].submission_id == "nested/C.java");
    CHECK(c.submissions[0].size() == 9);
}

TEST_CASE("load_dataset rejects empty datasets") {
    testgen::temp_dir dir("empty");
    CHECK_THROWS_AS(load_dataset(dir.path), empty_dataset_error);

    dir.write("notes.txt", "nothing to see");
    CHECK_THROWS_AS(load_dataset(dir.path), empty_dataset_error);

    CHECK_THROWS_AS(load_dataset(dir.path / "missing"), io_error);
}

TEST_CASE("load_dataset skips unlexable files with a warning") {
    testgen::temp_dir dir("skips");
    dir.write("good.java", "class G {}");
    dir.write("bad.java", "class B { String s = \"unterminated; }");

    std::vector<std::string> warnings;
    corpus c = load_dataset(dir.path, {.warnings = &warnings});
    REQUIRE(c.size() == 1);
    CHECK(c.submissions[0].submission_id == "good.java");
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("bad.java") != std::string::npos);

    CHECK_THROWS_AS(load_dataset(dir.path, {.fail_on_lex_error = true}), lex_error);
}

TEST_CASE("generate_pairs forms each unordered pair exactly once") {
    corpus abc;
    abc.dataset_id = "abc";
    for (std::string id : {"A", "B", "C"}) abc.submissions.push_back({id, {{token_kind::ident, 1, 1}}});

    auto pairs = generate_pairs(abc);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].id == pair_key{"A", "B"});
    CHECK(pairs[1].id == pair_key{"A", "C"});
    CHECK(pairs[2].id == pair_key{"B", "C"});
    CHECK(pairs[0].a->submission_id == "A");
    CHECK(pairs[0].b->submission_id == "B");

    CHECK(generate_pairs(tiny_corpus(2)).size() == 1);
    CHECK(generate_pairs(tiny_corpus(42)).size() == 861);

    CHECK_THROWS_AS(generate_pairs(tiny_corpus(1)), too_few_submissions_error);
}

TEST_CASE("pair lists match brute-force enumeration for small n") {
    for (std::size_t n = 2; n <= 10; ++n) {
        corpus c = tiny_corpus(n);
        auto pairs = generate_pairs(c);
        CHECK(pairs.size() == n * (n - 1) / 2);

        std::set<pair_key> seen;
        for (const auto& p : pairs) {
            CHECK(p.id.first < p.id.second);
            seen.insert(p.id);
        }
        CHECK(seen.size() == pairs.size());

        std::set<pair_key> expected;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                expected.insert(make_pair_key(c.submissions[i].submission_id, c.submissions[j].submission_id));
        CHECK(seen == expected);
    }
}

TEST_CASE("generate_variants honors the attack-level contracts") {
    token_sequence seed = tokenize(seed_programs[0].source, "stats.java");
    const std::vector<token_kind> base = kinds_of(seed);

    SECTION("level 1 is invisible at the kind level") {
        auto vs = generate_variants(seed, 1, 3, 7);
        REQUIRE(vs.size() == 3);
        for (const auto& v : vs) {
            CHECK(kinds_of(v) == base);
            CHECK(v.submission_id != seed.submission_id);
        }
    }

    SECTION("level 6 rewrites at least 30% of the tokens") {
        for (const auto& v : generate_variants(seed, 6, 3, 7)) {
            std::size_t dist = token_edit_distance(seed, v);
            CHECK(dist * 10 >= 3 * base.size());
        }
    }

    SECTION("deterministic for a fixed rng seed") {
        auto first = generate_variants(seed, 4, 5, 99);
        auto second = generate_variants(seed, 4, 5, 99);
        REQUIRE(first.size() == second.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            CHECK(kinds_of(first[i]) == kinds_of(second[i]));
            CHECK(first[i].submission_id == second[i].submission_id);
        }
        auto other_seed = generate_variants(seed, 4, 5, 100);
        bool any_diff = false;
        for (std::size_t i = 0; i < first.size(); ++i)
            any_diff = any_diff || kinds_of(first[i]) != kinds_of(other_seed[i]);
        CHECK(any_diff);
    }

    SECTION("variant ids keep the .java suffix") {
        auto vs = generate_variants(seed, 2, 2, 1);
        CHECK(vs[0].submission_id == "stats_l2_v1.java");
        CHECK(vs[1].submission_id == "stats_l2_v2.java");
    }

    SECTION("errors") {
        CHECK_THROWS_AS(generate_variants(token_sequence{"e.java", {}}, 2, 1, 0), empty_seed_error);
        CHECK_THROWS_AS(generate_variants(seed, 0, 1, 0), invalid_level_error);
        CHECK_THROWS_AS(generate_variants(seed, 7, 1, 0), invalid_level_error);
    }
}

TEST_CASE("variant severity grows with the attack level") {
    token_sequence seed = tokenize(seed_programs[1].source, "account.java");
    double previous_mean = -1.0;
    for (int level = 1; level <= 6; ++level) {
        auto vs = generate_variants(seed, level, 20, 2024);
        double total = 0.0;
        for (const auto& v : vs) total += static_cast<double>(token_edit_distance(seed, v));
        double mean = total / static_cast<double>(vs.size());
        INFO("level " << level << " mean edit distance " << mean);
        CHECK(mean >= previous_mean);
        previous_mean = mean;
    }
}

TEST_CASE("token edit distance is a sane metric") {
    using tk = token_kind;
    std::vector<tk> x{tk::kw_int, tk::ident, tk::semi};
    std::vector<tk> y{tk::kw_int, tk::int_lit, tk::semi};
    CHECK(token_edit_distance(std::span<const tk>(x), std::span<const tk>(x)) == 0);
    CHECK(token_edit_distance(std::span<const tk>(x), std::span<const tk>(y)) == 1);
    CHECK(token_edit_distance(std::span<const tk>(x), std::span<const tk>{}) == 3);
}

TEST_CASE("compute_stats mirrors min/max/avg/pairs") {
    corpus c;
    c.dataset_id = "statsy";
    c.submissions.push_back({"a.java", std::vector<token>(3, token{token_kind::ident, 1, 1})});
    c.submissions.push_back({"b.java", std::vector<token>(5, token{token_kind::ident, 1, 1})});
    c.submissions.push_back({"c.java", std::vector<token>(10, token{token_kind::ident, 1, 1})});

    dataset_stats s = compute_stats(c);
    CHECK(s.id == "statsy");
    CHECK(s.submissions == 3);
    CHECK(s.min_tokens == 3);
    CHECK(s.max_tokens == 10);
    CHECK(s.avg_tokens == Catch::Approx(6.0));
    CHECK(s.pair_count == 3);
}
