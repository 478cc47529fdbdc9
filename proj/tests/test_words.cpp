#include <catch2/catch_amalgamated.hpp>

#include "mzv/words.hpp"

using namespace mzv;

TEST_CASE("index basics") {
    Index idx({2, 3});
    CHECK(idx.weight() == 5);
    CHECK(idx.depth() == 2);
    CHECK(idx.is_admissible());
    CHECK_FALSE(Index({3, 1}).is_admissible());
    CHECK(Index({1}).weight() == 1);

    CHECK_THROWS_AS(Index({}), std::invalid_argument);
    CHECK_THROWS_AS(Index({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Index({-1}), std::invalid_argument);
    CHECK_THROWS_AS(Index({60, 60}), std::invalid_argument);  // default weight cap 64
    CHECK_NOTHROW(Index({60, 60}, 128));
}

TEST_CASE("index text form") {
    CHECK(to_string(Index({2, 3})) == "2,3");
    CHECK(to_string(Index({7})) == "7");
    CHECK(parse_index("2,3") == Index({2, 3}));
    CHECK(parse_index("10") == Index({10}));
    CHECK_THROWS_AS(parse_index(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("2,0"), std::invalid_argument);
}

TEST_CASE("word validation and predicates") {
    CHECK_THROWS_AS(Word("AXB"), std::invalid_argument);
    CHECK(Word("").empty());
    CHECK_FALSE(Word("").is_index_encoding());
    CHECK_FALSE(Word("BA").is_index_encoding());
    CHECK(Word("B").is_index_encoding());
    CHECK_FALSE(Word("B").encodes_admissible());
    CHECK(Word("AB").encodes_admissible());
}

TEST_CASE("word of index frozen examples") {
    CHECK(word_of_index(Index({2, 3})).letters() == "AABAB");
    CHECK(word_of_index(Index({1})).letters() == "B");
    CHECK(word_of_index(Index({1, 3})).letters() == "AABB");
    CHECK(word_of_index(Index({2})).letters() == "AB");
    CHECK(word_of_index(Index({1, 2})).letters() == "ABB");
}

TEST_CASE("index of word frozen examples") {
    CHECK(index_of_word(Word("AABAB")) == Index({2, 3}));
    CHECK(index_of_word(Word("B")) == Index({1}));
    CHECK(index_of_word(Word("AABB")) == Index({1, 3}));
    CHECK(index_of_word(Word("BAB")) == Index({2, 1}));
    CHECK_THROWS_AS(index_of_word(Word("")), std::invalid_argument);
    CHECK_THROWS_AS(index_of_word(Word("ABA")), std::invalid_argument);
}

TEST_CASE("roundtrip on all compositions of weight <= 8") {
    for (int w = 1; w <= 8; ++w) {
        auto all = enumerate_compositions(w);
        CHECK(all.size() == (w == 1 ? 1u : (1u << (w - 1))));
        for (const Index& idx : all) {
            Word enc = word_of_index(idx);
            CHECK(enc.is_index_encoding());
            CHECK(static_cast<int>(enc.size()) == idx.weight());
            CHECK(enc.encodes_admissible() == idx.is_admissible());
            CHECK(index_of_word(enc) == idx);
            CHECK(parse_index(to_string(idx)) == idx);
        }
    }
}

TEST_CASE("admissible enumeration in canonical order") {
    auto w4 = enumerate_admissible(4);
    REQUIRE(w4.size() == 4);
    CHECK(w4[0] == Index({4}));
    CHECK(w4[1] == Index({1, 3}));
    CHECK(w4[2] == Index({2, 2}));
    CHECK(w4[3] == Index({1, 1, 2}));
    for (int w = 2; w <= 10; ++w) {
        auto adm = enumerate_admissible(w);
        CHECK(adm.size() == (1u << (w - 2)));
        for (size_t i = 1; i < adm.size(); ++i) CHECK(canonical_index_less(adm[i - 1], adm[i]));
    }
}
