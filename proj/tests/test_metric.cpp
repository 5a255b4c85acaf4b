#include "fll/metric.hpp"

#include "fll/analytic.hpp"

#include <doctest.h>

#include <functional>
#include <vector>

using namespace fll;

namespace {

bool raises(errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code() == code;
    }
    return false;
}

std::vector<Word> all_words(std::uint32_t m, std::uint64_t n) {
    std::vector<Word> words;
    for_each_word(m, n, [&](std::span<const std::uint32_t> symbols,
                            const ProfileAccumulator&) {
        words.emplace_back(std::vector<std::uint32_t>(symbols.begin(), symbols.end()), m);
    });
    return words;
}

WordSet set_of(std::initializer_list<const char*> words, std::uint32_t m) {
    std::vector<Word> elems;
    for (const char* w : words) elems.push_back(Word::parse(w, m));
    return WordSet::from_words(std::move(elems));
}

} // namespace

TEST_CASE("deletion sphere") {
    CHECK(deletion_sphere(Word::parse("010", 2), 1) == set_of({"10", "00", "01"}, 2));
    const Word x = Word::parse("0110", 2);
    CHECK(deletion_sphere(x, 0) == WordSet::from_words({x}));
    CHECK(raises(errc::radius_too_large, [&] { deletion_sphere(x, 4); }));

    // |D_1(x)| = rho(x)
    for (const Word& w : all_words(2, 8)) {
        REQUIRE(deletion_sphere(w, 1).size() == profile(w).rho);
    }
    for (const Word& w : all_words(3, 5)) {
        REQUIRE(deletion_sphere(w, 1).size() == profile(w).rho);
    }
}

TEST_CASE("insertion sphere") {
    CHECK(insertion_sphere(Word::parse("10", 2), 1) ==
          set_of({"010", "110", "100", "101"}, 2));
    const Word x = Word::parse("021", 3);
    CHECK(insertion_sphere(x, 0) == WordSet::from_words({x}));

    // the sphere size does not depend on the center
    for (const Word& w : all_words(3, 5)) {
        REQUIRE(Int(insertion_sphere(w, 1).size()) == insertion_count(5, 1, 3));
    }
    for (const Word& w : all_words(2, 4)) {
        REQUIRE(Int(insertion_sphere(w, 2).size()) == insertion_count(4, 2, 2));
    }
}

TEST_CASE("insertion count formula") {
    CHECK(insertion_count(2, 1, 2) == 4);
    CHECK(insertion_count(7, 0, 5) == 1);
    CHECK(insertion_count(3, 1, 3) == 9); // 1 + 4*2
    CHECK(insertion_count(100, 3, 4) == 4822564);
}

TEST_CASE("fll distance") {
    const Word x = Word::parse("0101", 2);
    CHECK(fll_distance(x, x) == 0);
    CHECK(fll_distance(Word::parse("01", 2), Word::parse("10", 2)) == 1);
    CHECK(raises(errc::length_mismatch, [] {
        fll_distance(Word::parse("01", 2), Word::parse("010", 2));
    }));
    CHECK(raises(errc::alphabet_mismatch, [] {
        fll_distance(Word::parse("01", 2), Word::parse("01", 3));
    }));

    // fast path == definitional path (smaller grid here; acceptance runs the full one)
    const std::vector<Word> binary = all_words(2, 5);
    for (const Word& a : binary) {
        for (const Word& b : binary) {
            REQUIRE(fll_distance(a, b) == fll_distance_definitional(a, b));
        }
    }

    // distance is shift-invariant
    const std::vector<Word> ternary = all_words(3, 4);
    for (std::size_t i = 0; i < ternary.size(); i += 7) {
        for (std::size_t j = 0; j < ternary.size(); j += 5) {
            for (std::uint32_t k = 1; k < 3; ++k) {
                REQUIRE(fll_distance(shift_word(ternary[i], k), shift_word(ternary[j], k)) ==
                        fll_distance(ternary[i], ternary[j]));
            }
        }
    }
}

TEST_CASE("fll ball enumeration") {
    CHECK(fll_ball(Word::parse("010", 2), 1) ==
          set_of({"000", "001", "010", "011", "100", "101", "110"}, 2));
    CHECK(fll_ball(Word::parse("000", 2), 1) == set_of({"000", "001", "010", "100"}, 2));

    // radius n reaches the whole space
    CHECK(fll_ball(Word::parse("000", 2), 3).size() == 8);
    CHECK(fll_ball(Word::parse("0120", 3), 4).size() == 81);
    CHECK(fll_ball(Word::parse("2", 3), 1).size() == 3);

    CHECK(raises(errc::radius_too_large, [] { fll_ball(Word::parse("010", 2), 4); }));

    // balls are monotone in t and consistent with the distance
    for (const Word& x : all_words(2, 5)) {
        WordSet previous = fll_ball(x, 0);
        REQUIRE(previous == WordSet::from_words({x}));
        for (std::uint64_t t = 1; t <= 5; ++t) {
            const WordSet ball = fll_ball(x, t);
            for (const Word& y : previous) REQUIRE(ball.contains(y));
            previous = ball;
        }
        const WordSet two_ball = fll_ball(x, 2);
        for (const Word& y : all_words(2, 5)) {
            REQUIRE(two_ball.contains(y) == (fll_distance(x, y) <= 2));
        }
    }
}

TEST_CASE("ball enumeration matches the distance definition over Z_3^4") {
    const std::vector<Word> words = all_words(3, 4);
    for (std::size_t i = 0; i < words.size(); i += 11) {
        const WordSet ball = fll_ball(words[i], 1);
        for (const Word& y : words) {
            REQUIRE(ball.contains(y) == (fll_distance(words[i], y) <= 1));
        }
    }
}

TEST_CASE("word set canonicalization and serialization") {
    const WordSet set = set_of({"10", "01", "10", "00"}, 2);
    CHECK(set.size() == 3);
    CHECK(set.to_lines() == "00\n01\n10\n");
    CHECK(set.contains(Word::parse("01", 2)));
    CHECK_FALSE(set.contains(Word::parse("11", 2)));
    CHECK(set.intersects(set_of({"11", "10"}, 2)));
    CHECK_FALSE(set.intersects(set_of({"11"}, 2)));
    CHECK(raises(errc::length_mismatch, [] {
        WordSet::from_words({Word::parse("0", 2), Word::parse("00", 2)});
    }));
}
