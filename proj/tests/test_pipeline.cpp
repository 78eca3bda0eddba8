#include "translit/io.hpp"
#include "translit/pipeline.hpp"
#include "translit/synthetic.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cstring>
#include <set>

using namespace translit;
using translit::testing::fixture;

namespace {

const Corpus& lexicon() {
    static const Corpus c = load_corpus(data_dir() / "lexicon.tsv");
    return c;
}

Corpus without_soft_sign(const Corpus& c) {
    Corpus out;
    for (const auto& e : c.entries) {
        if (e.cyrillic.find("ь") == std::string::npos) out.entries.push_back(e);
    }
    return out;
}

const TranslitModel& forward_model() {
    static const TranslitModel m =
        train_direction(lexicon(), {2, 3}, bundled_mapping_table(Direction::cyr2lat()), Direction::cyr2lat()).model;
    return m;
}

const TranslitModel& backward_model() {
    static const TranslitModel m = train_direction(without_soft_sign(lexicon()), {4, 3},
                                                   bundled_mapping_table(Direction::lat2cyr()), Direction::lat2cyr())
                                       .model;
    return m;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void check_micro_identity(const EvalReport& r) {
    CHECK(same_bits(r.char_precision, r.char_recall));
    CHECK(same_bits(r.char_recall, r.char_f1));
}

}  // namespace

TEST_CASE("lexicon models") {
    CHECK(transliterate_word(forward_model(), "цирк") == "sirk");
    CHECK(transliterate_word(forward_model(), "китоб") == "kitob");
    CHECK(transliterate_word(forward_model(), "октябрь") == "oktabr");
    CHECK(transliterate_word(forward_model(), "2020") == "2020");
    CHECK(transliterate_word(backward_model(), "sirt") == "сирт");
    CHECK(transliterate_word(backward_model(), "qo'zichoq") == "қўзичоқ");
    CHECK(forward_model().window == WindowSpec{2, 3});
    CHECK(forward_model().table_fingerprint == bundled_mapping_table(Direction::cyr2lat()).fingerprint());
}

TEST_CASE("orthography rule words") {
    const auto rules = load_corpus(fixture("orthography_rules.tsv"));
    REQUIRE(rules.size() == 7);
    for (const auto& e : rules.entries) {
        CHECK(transliterate_word(forward_model(), e.cyrillic) == e.latin);
    }
}

TEST_CASE("training-set fit on the lexicon is exact") {
    const auto table = bundled_mapping_table(Direction::cyr2lat());
    const auto samples = corpus_samples(lexicon().pairs(Direction::cyr2lat()), {2, 3}, table);
    const auto c = score_samples(forward_model(), samples);
    CHECK(c.correct == c.total);
    const auto report = evaluate(forward_model(), lexicon(), table);
    CHECK(report.word_accuracy == 1.0);
    CHECK(report.char_f1 == 1.0);
    CHECK(report.errors.empty());
    check_micro_identity(report);
}

TEST_CASE("train_direction errors") {
    const auto table = bundled_mapping_table(Direction::cyr2lat());
    try {
        train_direction(Corpus{}, {2, 3}, table, Direction::cyr2lat());
        FAIL("expected TrainingError");
    } catch (const TrainingError& e) {
        CHECK(e.kind() == TrainingError::Kind::AllPairsUnalignable);
    }
    Corpus junk;
    junk.entries = {{"аб", "xyz"}};
    CHECK_THROWS_AS(train_direction(junk, {1, 1}, table, Direction::cyr2lat()), TrainingError);
    CHECK_THROWS_AS(train_direction(lexicon(), {1, 1}, table, Direction::lat2cyr()), DirectionMismatch);

    junk.entries.push_back({"бола", "bola"});
    const auto outcome = train_direction(junk, {1, 1}, table, Direction::cyr2lat());
    REQUIRE(outcome.skipped.size() == 1);
    CHECK(outcome.skipped[0].pair.source == "аб");
    CHECK(outcome.sample_count == 4);
}

TEST_CASE("text keeps case and punctuation") {
    const auto& m = forward_model();
    CHECK(transliterate_text(m, "Цирк, ЦИРК ва цирк!") == "Sirk, SIRK va sirk!");
    CHECK(transliterate_text(m, "Қўзичоқ 2020 й.") == "Qo'zichoq 2020 y.");
    CHECK(transliterate_text(m, "тез-тез - бола") == "tez-tez - bola");
    CHECK(transliterate_text(backward_model(), "O‘zbek") == "Ўзбек");
    CHECK(transliterate_text(m, "") == "");
}

TEST_CASE("case helpers") {
    CHECK(detect_case("бола") == WordCase::Lower);
    CHECK(detect_case("Бола") == WordCase::Capitalized);
    CHECK(detect_case("БОЛА") == WordCase::Upper);
    CHECK(detect_case("Б") == WordCase::Capitalized);
    CHECK(apply_case("o'zbek", WordCase::Capitalized) == "O'zbek");
    CHECK(apply_case("'ayn", WordCase::Capitalized) == "'Ayn");
    CHECK(apply_case("shahar", WordCase::Upper) == "SHAHAR");
}

TEST_CASE("evaluate counts characters against the gold alignment") {
    const auto table = parse_mapping_table("б\tb\nо\to\nл\tl\nа\ta,o\n", Direction::cyr2lat());
    Corpus train_part;
    train_part.entries = {{"бола", "bola"}};
    const auto m = train_direction(train_part, {0, 0}, table, Direction::cyr2lat()).model;

    Corpus held;
    held.entries = {{"бола", "bolo"}};
    const auto r = evaluate(m, held, table);
    CHECK(r.char_total == 4);
    CHECK(r.char_correct == 3);
    CHECK(r.char_f1 == 0.75);
    CHECK(r.word_accuracy == 0.0);
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0] == EvalError{"бола", "bola", "bolo"});
    check_micro_identity(r);

    held.entries = {{"бола", "bola"}, {"абл", "xyz"}};
    const auto partial = evaluate(m, held, table);
    CHECK(partial.char_total == 7);
    CHECK(partial.char_correct == 4);
    CHECK(partial.word_correct == 1);
    check_micro_identity(partial);

    const auto empty = evaluate(m, Corpus{}, table);
    CHECK(empty.char_f1 == 0.0);
    check_micro_identity(empty);
}

TEST_CASE("report renderings") {
    EvalReport r;
    r.char_total = 4;
    r.char_correct = 3;
    r.char_precision = r.char_recall = r.char_f1 = 0.75;
    r.errors = {{"бола", "bola", "bolo"}};
    CHECK(r.to_json().find("\"char_f1\": 0.75") != std::string::npos);
    CHECK(r.to_tsv().find("char_f1\t0.75\n") != std::string::npos);
    CHECK(r.to_tsv().find("бола\tbola\tbolo\n") != std::string::npos);
}

TEST_CASE("micro identity holds for any tally") {
    for (std::size_t total = 1; total < 300; total += 7) {
        for (std::size_t correct = 0; correct <= total; ++correct) {
            const CharCounts c{correct, total};
            REQUIRE(same_bits(c.precision(), c.recall()));
            REQUIRE(same_bits(c.recall(), c.f1()));
        }
    }
}

TEST_CASE("grid search prefers the smallest window on ties") {
    // one-to-one letters: every cell is perfect, so (0, 0) must win
    Corpus c;
    for (const char* w : {"бола", "бобо", "дала", "ош", "лаб", "бош", "ола", "дош", "шол", "албом"}) {
        std::string lat;
        for (const char32_t ch : unicode::decode(w)) {
            lat += ch == U'б' ? "b" : ch == U'о' ? "o" : ch == U'л' ? "l" : ch == U'а' ? "a" : ch == U'д' ? "d"
                 : ch == U'ш' ? "sh" : "m";
        }
        c.entries.push_back({w, lat});
    }
    const auto table = bundled_mapping_table(Direction::cyr2lat());
    const auto r = grid_search(c, c, table, Direction::cyr2lat(), {0, 2}, {0, 2}, 2);
    CHECK(r.best == WindowSpec{0, 0});
    CHECK(r.best_f1 == 1.0);
    CHECK(r.cells.size() == 9);
    CHECK(r.to_tsv().rfind("x\ty\tvalidation_f1\n0\t0\t1\n", 0) == 0);

    const auto single = grid_search(c, c, table, Direction::cyr2lat(), {3, 3}, {1, 1});
    CHECK(single.best == WindowSpec{3, 1});
    CHECK(single.cells.size() == 1);
}

TEST_CASE("grid search does not depend on the thread count") {
    const auto parts = split_corpus(gen_corpus(600, 5), {});
    const auto table = bundled_mapping_table(Direction::cyr2lat());
    const auto one = grid_search(parts.train, parts.validation, table, Direction::cyr2lat(), {0, 2}, {0, 2}, 1);
    const auto four = grid_search(parts.train, parts.validation, table, Direction::cyr2lat(), {0, 2}, {0, 2}, 4);
    CHECK(one.to_tsv() == four.to_tsv());
    CHECK(one.best == four.best);
    CHECK(serialize(one.best_model) == serialize(four.best_model));
    CHECK_THROWS_AS(grid_search(parts.train, parts.validation, table, Direction::cyr2lat(), {2, 1}, {0, 0}),
                    InvalidArgument);
    CHECK_THROWS_AS(grid_search(parts.train, parts.validation, table, Direction::cyr2lat(), {0, 11}, {0, 0}),
                    InvalidArgument);
}

TEST_CASE("round trip on the lexicon loses exactly the soft sign words") {
    std::vector<std::string> words;
    std::set<std::string> soft;
    for (const auto& e : lexicon().entries) {
        words.push_back(e.cyrillic);
        if (e.cyrillic.find("ь") != std::string::npos) soft.insert(e.cyrillic);
    }
    const auto r = round_trip_check(forward_model(), backward_model(), words);
    std::set<std::string> failed;
    std::string listing;
    for (const auto& f : r.failures) {
        failed.insert(f.word);
        listing += f.word + "\t" + f.forward + "\t" + f.back + "\n";
    }
    CHECK(failed == soft);
    CHECK(r.recovered + soft.size() == r.total);

    std::string frozen;
    const std::string fixture_text = io::read_file(fixture("soft_sign_loss.tsv"));
    for (const auto line : io::split_lines(fixture_text)) {
        if (!line.empty() && line[0] != '#') frozen += std::string(line) + "\n";
    }
    CHECK(listing == frozen);

    const auto october = std::find_if(r.failures.begin(), r.failures.end(),
                                      [](const RoundTripFailure& f) { return f.word == "октябрь"; });
    REQUIRE(october != r.failures.end());
    CHECK(october->forward == "oktabr");
    CHECK(october->back == "октабр");
}

TEST_CASE("round trip edge cases") {
    CHECK(round_trip_check(forward_model(), backward_model(), {}).fraction() == 1.0);
    CHECK_THROWS_AS(round_trip_check(forward_model(), forward_model(), {}), DirectionMismatch);
}
