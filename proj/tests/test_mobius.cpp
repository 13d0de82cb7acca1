#include <random>
#include <string>

#include "doctest.h"
#include "hiero/enumeration.hpp"
#include "hiero/mobius.hpp"
#include "oracles.hpp"

using namespace hiero;

TEST_CASE("decision on the named words") {
    CHECK_FALSE(is_weakly_realizable(parse_word("abcacb")));
    CHECK_FALSE(is_weakly_realizable(parse_word("ababcdcd")));
    CHECK(is_weakly_realizable(parse_word("abcabc")));
    CHECK(is_weakly_realizable(parse_word("")));
    CHECK(is_weakly_realizable(parse_word("aa")));
    CHECK(is_weakly_realizable(parse_word("aabb")));
    CHECK(is_weakly_realizable(parse_word("aabcbc")));
    CHECK(is_weakly_realizable(parse_word("abab")));
}

TEST_CASE("checker agrees with the brute-force twist oracle on every small word") {
    for (int n = 0; n <= 4; ++n)
        for_each_matching_code(n, [&](const std::vector<int>& code) {
            REQUIRE(is_weakly_realizable(Hieroglyph(code)) ==
                    oracles::naive_weakly_realizable(code));
        });
    std::mt19937 rng(211);
    for (int trial = 0; trial < 120; ++trial) {
        int n = trial % 11;
        std::vector<int> code = oracles::random_code(n, rng);
        CHECK(is_weakly_realizable(Hieroglyph(code)) == oracles::naive_weakly_realizable(code));
    }
}

TEST_CASE("decision is invariant under rotation, reflection and renaming") {
    std::mt19937 rng(223);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 9;
        Hieroglyph h(oracles::random_code(n, rng));
        bool base = is_weakly_realizable(h);
        CHECK(is_weakly_realizable(rotated(h, 1 + static_cast<int>(rng() % 7))) == base);
        CHECK(is_weakly_realizable(reflected(h)) == base);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("L" + std::to_string(n - i));
        CHECK(is_weakly_realizable(Hieroglyph(h.code(), names)) == base);
    }
}

TEST_CASE("interlacement profile counts degrees and edges; kernels agree") {
    std::mt19937 rng(227);
    for (int trial = 0; trial < 80; ++trial) {
        int n = trial % 30;
        Hieroglyph h(oracles::random_code(n, rng));
        InterlacementProfile serial = interlacement_profile(h, Exec::Serial);
        InterlacementProfile parallel = interlacement_profile(h, Exec::Parallel);
        CHECK(serial.degree == parallel.degree);
        CHECK(serial.edges == parallel.edges);
        CHECK(serial.non_isolated == parallel.non_isolated);

        oracles::IntMatrix m = oracles::naive_interlacement_matrix(h.code());
        long long edges = 0;
        int non_isolated = 0;
        for (int i = 0; i < n; ++i) {
            int deg = 0;
            for (int j = 0; j < n; ++j) deg += m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            REQUIRE(serial.degree[static_cast<size_t>(i)] == deg);
            edges += deg;
            if (deg > 0) ++non_isolated;
        }
        CHECK(serial.edges == edges / 2);
        CHECK(serial.non_isolated == non_isolated);
    }
}

TEST_CASE("positive certificates color every letter and validate") {
    Certificate c = certify(parse_word("aabcbc"));
    REQUIRE(c.kind == Certificate::Kind::Realizable);
    CHECK(c.red == std::vector<std::string>{"b", "c"});
    CHECK(c.blue == std::vector<std::string>{"a"});
    CHECK(validate_certificate(parse_word("aabcbc"), c));

    Certificate all_blue = certify(parse_word("aabb"));
    REQUIRE(all_blue.kind == Certificate::Kind::Realizable);
    CHECK(all_blue.red.empty());
    CHECK(all_blue.blue == std::vector<std::string>{"a", "b"});

    Certificate empty = certify(parse_word(""));
    REQUIRE(empty.kind == Certificate::Kind::Realizable);
    CHECK(empty.red.empty());
    CHECK(empty.blue.empty());
    CHECK(validate_certificate(parse_word(""), empty));

    Certificate mixed = certify(parse_word("aabbcdcd"));
    REQUIRE(mixed.kind == Certificate::Kind::Realizable);
    CHECK(mixed.red == std::vector<std::string>{"c", "d"});
    CHECK(mixed.blue == std::vector<std::string>{"a", "b"});
}

TEST_CASE("negative certificates name a forbidden pattern and validate") {
    Certificate p = certify(parse_word("abcacb"));
    REQUIRE(p.kind == Certificate::Kind::NotRealizable);
    CHECK(p.pattern == Certificate::Pattern::abcacb);
    CHECK(p.witness_letters == std::vector<std::string>{"a", "b", "c"});
    CHECK(validate_certificate(parse_word("abcacb"), p));

    Certificate q = certify(parse_word("ababcdcd"));
    REQUIRE(q.kind == Certificate::Kind::NotRealizable);
    CHECK(q.pattern == Certificate::Pattern::ababcdcd);
    CHECK(q.witness_letters == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(validate_certificate(parse_word("ababcdcd"), q));

    // Isolated letters never join a witness.
    Certificate shifted = certify(parse_word("ddabcacb"));
    REQUIRE(shifted.kind == Certificate::Kind::NotRealizable);
    CHECK(shifted.pattern == Certificate::Pattern::abcacb);
    CHECK(shifted.witness_letters == std::vector<std::string>{"a", "b", "c"});

    // Two interlacing pairs with nothing between them force the 4-letter pattern.
    Certificate dq = certify(parse_word("ababcdcdefef"));
    REQUIRE(dq.kind == Certificate::Kind::NotRealizable);
    CHECK(dq.pattern == Certificate::Pattern::ababcdcd);
    CHECK(dq.witness_letters == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("pattern words spell the two forbidden patterns") {
    CHECK(std::string(pattern_word(Certificate::Pattern::abcacb)) == "abcacb");
    CHECK(std::string(pattern_word(Certificate::Pattern::ababcdcd)) == "ababcdcd");
}

TEST_CASE("certify output always validates and matches the decision") {
    std::mt19937 rng(229);
    for (int trial = 0; trial < 300; ++trial) {
        int n = trial % 10;
        Hieroglyph h(oracles::random_code(n, rng));
        Certificate c = certify(h);
        CHECK((c.kind == Certificate::Kind::Realizable) == is_weakly_realizable(h));
        CHECK(validate_certificate(h, c));
    }
}

TEST_CASE("validation rejects tampered certificates") {
    Hieroglyph pos = parse_word("aabcbc");
    Certificate good = certify(pos);

    Certificate swapped = good;
    swapped.red = {"c"};
    swapped.blue = {"a", "b"};  // b interlaces c, so blue b is wrong
    CHECK_FALSE(validate_certificate(pos, swapped));

    Certificate missing = good;
    missing.blue.clear();  // a is left uncolored
    CHECK_FALSE(validate_certificate(pos, missing));

    Certificate doubled = good;
    doubled.blue = {"a", "b"};  // b colored twice
    CHECK_FALSE(validate_certificate(pos, doubled));

    Certificate unknown = good;
    unknown.blue = {"z"};
    CHECK_FALSE(validate_certificate(pos, unknown));

    Hieroglyph neg = parse_word("abcacb");
    Certificate bad_pattern = certify(neg);
    bad_pattern.pattern = Certificate::Pattern::ababcdcd;  // wrong size and shape
    CHECK_FALSE(validate_certificate(neg, bad_pattern));

    Certificate short_witness = certify(neg);
    short_witness.witness_letters = {"a", "b"};
    CHECK_FALSE(validate_certificate(neg, short_witness));

    Certificate repeated = certify(neg);
    repeated.witness_letters = {"a", "a", "b"};
    CHECK_FALSE(validate_certificate(neg, repeated));

    // A valid certificate for one word does not validate against another.
    CHECK_FALSE(validate_certificate(parse_word("abcabc"), certify(neg)));
    CHECK_FALSE(validate_certificate(neg, certify(parse_word("abcabc"))));

    // Witness letters form a set: permuting them keeps the certificate valid.
    Certificate permuted = certify(neg);
    permuted.witness_letters = {"c", "a", "b"};
    CHECK(validate_certificate(neg, permuted));
}

TEST_CASE("subset scan for forbidden patterns agrees with the degree checker") {
    CHECK_FALSE(check_condition4(parse_word("abcacb")));
    CHECK_FALSE(check_condition4(parse_word("ababcdcd")));
    CHECK(check_condition4(parse_word("abcabc")));
    CHECK(check_condition4(parse_word("")));
    for (int n = 0; n <= 4; ++n)
        for_each_matching_code(n, [&](const std::vector<int>& code) {
            Hieroglyph h(code);
            REQUIRE(check_condition4(h) == is_weakly_realizable(h));
        });
}

TEST_CASE("reduction removes exactly the isolated letters") {
    ReduceResult r1 = reduce_condition3(parse_word("aabb"));
    CHECK(r1.removed == std::vector<std::string>{"a", "b"});
    CHECK(r1.core.letters() == 0);
    CHECK(r1.is_canonical_clique);

    ReduceResult r2 = reduce_condition3(parse_word("aabcbc"));
    CHECK(r2.removed == std::vector<std::string>{"a"});
    CHECK(r2.core.word_string() == "bcbc");
    CHECK(r2.is_canonical_clique);

    ReduceResult r3 = reduce_condition3(parse_word("abcacb"));
    CHECK(r3.removed.empty());
    CHECK(r3.core.word_string() == "abcacb");
    CHECK_FALSE(r3.is_canonical_clique);

    ReduceResult r4 = reduce_condition3(parse_word("ababcdcd"));
    CHECK(r4.removed.empty());
    CHECK_FALSE(r4.is_canonical_clique);
}

TEST_CASE("reduction verdict matches the decision everywhere") {
    std::mt19937 rng(233);
    for (int trial = 0; trial < 200; ++trial) {
        int n = trial % 10;
        Hieroglyph h(oracles::random_code(n, rng));
        ReduceResult r = reduce_condition3(h);
        CHECK(r.is_canonical_clique == is_weakly_realizable(h));
        // Removed letters are isolated in the original; core letters are not.
        InterlacementProfile profile = interlacement_profile(h, Exec::Serial);
        CHECK(static_cast<int>(r.removed.size()) + r.core.letters() == n);
        for (const std::string& name : r.removed)
            CHECK(profile.degree[static_cast<size_t>(h.letter_id(name))] == 0);
        for (const std::string& name : r.core.names())
            CHECK(profile.degree[static_cast<size_t>(h.letter_id(name))] > 0);
    }
}
