#include "translit/aligner.hpp"
#include "translit/featurizer.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace translit;
using translit::testing::sample;
using translit::testing::syms;

TEST_CASE("lambkin feature rows, two before and one after") {
    const auto table = bundled_mapping_table(Direction::cyr2lat());
    const auto samples = extract_samples(align_word("қўзичоқ", "qo'zichoq", table), {2, 1});
    const std::vector<Sample> expected{
        sample(U"∅∅қў", "q"), sample(U"∅қўз", "o'"), sample(U"қўзи", "z"), sample(U"ўзич", "i"),
        sample(U"зичо", "ch"), sample(U"ичоқ", "o"), sample(U"чоқ∅", "q"),
    };
    CHECK(samples == expected);
    CHECK(format_sample_dump(std::span(samples).first(1)) == "∅|∅|қ|ў\tq\n");
}

TEST_CASE("padding on both sides") {
    AlignedPair a{U"а", {"a"}, Direction::cyr2lat()};
    CHECK(extract_samples(a, {2, 1}) == std::vector<Sample>{sample(U"∅∅а∅", "a")});
    CHECK(extract_window(U"абв", 1, {0, 0}) == syms(U"б"));
}

TEST_CASE("window shape on random words") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 300; ++round) {
        std::u32string w;
        for (std::size_t k = 0, n = 1 + rng() % 9; k < n; ++k) w += static_cast<char32_t>(U'а' + rng() % 5);
        const WindowSpec win{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto f = extract_window(w, i, win);
            REQUIRE(f.size() == win.width());
            CHECK(f[static_cast<std::size_t>(win.x)] == Symbol(w[i]));
            // padding only at the outer ends
            for (std::size_t k = 1; k < f.size(); ++k) {
                if (k <= static_cast<std::size_t>(win.x)) {
                    CHECK_FALSE((f[k].is_pad() && !f[k - 1].is_pad()));
                } else {
                    CHECK_FALSE((!f[k].is_pad() && f[k - 1].is_pad()));
                }
            }
        }
    }
}

TEST_CASE("window bounds") {
    CHECK(WindowSpec::checked(10, 0).width() == 11);
    CHECK_THROWS_AS(WindowSpec::checked(11, 0), InvalidArgument);
    CHECK_THROWS_AS(WindowSpec::checked(0, -1), InvalidArgument);
}

TEST_CASE("padding is not a character") {
    CHECK(Symbol::pad().is_pad());
    CHECK_FALSE(Symbol(U'∅').is_pad());
    CHECK(Symbol(U'\U0010FFFF') < Symbol::pad());
    CHECK(Symbol::pad().to_string() == "∅");
    CHECK(Symbol(U'қ').to_string() == "қ");
}

TEST_CASE("dedup_samples") {
    const auto f = sample(U"аб", "a");
    const auto g = sample(U"аб", "b");
    CHECK(dedup_samples(std::vector{f, f}) == std::vector{f});
    CHECK(dedup_samples(std::vector{f, g}) == std::vector{f, g});
    CHECK(dedup_samples(std::vector{g, f, g, f}) == std::vector{g, f});
    CHECK(dedup_samples({}).empty());
}

TEST_CASE("dedup is idempotent") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const auto s = translit::testing::random_samples(rng, 40, 2, U"аб", {"a", "b"});
        const auto once = dedup_samples(s);
        CHECK(dedup_samples(once) == once);
        CHECK(once.size() <= s.size());
    }
}
