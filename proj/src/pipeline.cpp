#include "translit/pipeline.hpp"

#include "translit/error.hpp"
#include "translit/unicode.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace translit {

std::vector<Sample> corpus_samples(std::span<const WordPair> pairs, WindowSpec window, const MappingTable& table,
                                   std::vector<AlignmentFailure>* skipped) {
    CorpusAlignment aligned = align_corpus(pairs, table);
    if (skipped) {
        skipped->insert(skipped->end(), aligned.failures.begin(), aligned.failures.end());
    }
    std::vector<Sample> samples;
    for (const auto& a : aligned.alignments) {
        auto s = extract_samples(a, window);
        samples.insert(samples.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    }
    return dedup_samples(samples);
}

TrainOutcome train_direction(const Corpus& train, WindowSpec window, const MappingTable& table,
                             const Direction& direction) {
    if (table.direction() != direction) {
        throw DirectionMismatch("mapping table is " + table.direction().tag() + ", training " + direction.tag());
    }
    std::vector<AlignmentFailure> skipped;
    const auto samples = corpus_samples(train.pairs(direction), window, table, &skipped);
    if (samples.empty()) {
        throw TrainingError(TrainingError::Kind::AllPairsUnalignable,
                            train.empty() ? "training part is empty"
                                          : "none of the " + std::to_string(train.size()) +
                                                " training pairs can be aligned with the mapping table");
    }
    return TrainOutcome{translit::train(samples, window, direction, table.fingerprint()), std::move(skipped),
                        samples.size()};
}

// ---------------------------------------------------------------------------

std::vector<std::string> predict_segments(const TranslitModel& model, std::u32string_view word) {
    std::vector<std::string> out;
    out.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!model.knows(word[i])) {
            out.push_back(unicode::encode(word[i]));
        } else {
            out.push_back(model.predict(extract_window(word, i, model.window)));
        }
    }
    return out;
}

std::string transliterate_word(const TranslitModel& model, std::string_view word) {
    std::string out;
    for (const auto& seg : predict_segments(model, unicode::decode(word))) {
        out += seg;
    }
    return out;
}

WordCase detect_case(std::string_view word) {
    std::size_t upper = 0, lower = 0;
    bool first_upper = false, seen_letter = false;
    for (const char32_t c : unicode::decode(word)) {
        if (unicode::is_upper(c)) {
            ++upper;
        } else if (unicode::is_lower(c)) {
            ++lower;
        } else {
            continue;
        }
        if (!seen_letter) {
            first_upper = unicode::is_upper(c);
            seen_letter = true;
        }
    }
    if (upper >= 2 && lower == 0) {
        return WordCase::Upper;
    }
    return first_upper ? WordCase::Capitalized : WordCase::Lower;
}

std::string apply_case(std::string_view lower_word, WordCase word_case) {
    switch (word_case) {
    case WordCase::Lower:
        return std::string(lower_word);
    case WordCase::Upper:
        return unicode::to_upper(lower_word);
    case WordCase::Capitalized: {
        auto cps = unicode::decode(lower_word);
        const auto first = std::find_if(cps.begin(), cps.end(), [](char32_t c) { return unicode::is_letter(c); });
        if (first == cps.end()) {
            return std::string(lower_word);
        }
        const auto head = static_cast<std::size_t>(first - cps.begin());
        return unicode::encode(std::u32string_view(cps).substr(0, head)) +
               unicode::to_upper(unicode::encode(*first)) + unicode::encode(std::u32string_view(cps).substr(head + 1));
    }
    }
    return std::string(lower_word);
}

std::string transliterate_text(const TranslitModel& model, std::string_view text) {
    const NormalizationPolicy policy;
    const auto is_word_char = [&policy](char32_t c) {
        return unicode::is_letter(c) || policy.apostrophe_variants.find(c) != std::u32string::npos;
    };
    const std::u32string cps = unicode::decode(unicode::to_nfc(text));
    std::string out;
    std::size_t i = 0;
    while (i < cps.size()) {
        if (!is_word_char(cps[i])) {
            out += unicode::encode(cps[i]);
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < cps.size() &&
               (is_word_char(cps[end]) ||
                (cps[end] == U'-' && end + 1 < cps.size() && is_word_char(cps[end + 1])))) {
            ++end;
        }
        const std::string token = unicode::encode(std::u32string_view(cps).substr(i, end - i));
        out += apply_case(transliterate_word(model, normalize_word(token, policy)), detect_case(token));
        i = end;
    }
    return out;
}

// ---------------------------------------------------------------------------

double CharCounts::precision() const {
    const std::size_t false_pos = total - correct;
    return total ? static_cast<double>(correct) / static_cast<double>(correct + false_pos) : 0.0;
}

double CharCounts::recall() const {
    const std::size_t false_neg = total - correct;
    return total ? static_cast<double>(correct) / static_cast<double>(correct + false_neg) : 0.0;
}

double CharCounts::f1() const {
    const std::size_t wrong = total - correct;
    // 2TP / (2TP + FP + FN)
    return total ? static_cast<double>(2 * correct) / static_cast<double>(2 * correct + wrong + wrong) : 0.0;
}

EvalReport evaluate(const TranslitModel& model, const Corpus& heldout, const MappingTable& table) {
    EvalReport report;
    CharCounts chars;
    for (const auto& pair : heldout.pairs(model.direction)) {
        const std::u32string source = unicode::decode(pair.source);
        const auto predicted = predict_segments(model, source);
        std::string output;
        for (const auto& seg : predicted) {
            output += seg;
        }

        chars.total += source.size();
        bool aligned = false;
        if (!source.empty()) {
            const auto outcome = try_align_word(pair.source, pair.target, table);
            if (const auto* gold = std::get_if<AlignedPair>(&outcome)) {
                aligned = true;
                for (std::size_t i = 0; i < source.size(); ++i) {
                    chars.correct += predicted[i] == gold->target_segments[i];
                }
            }
        }
        ++report.word_total;
        if (aligned && output == pair.target) {
            ++report.word_correct;
        } else {
            report.errors.push_back({pair.source, output, pair.target});
        }
    }
    report.char_total = chars.total;
    report.char_correct = chars.correct;
    report.char_precision = chars.precision();
    report.char_recall = chars.recall();
    report.char_f1 = chars.f1();
    report.word_accuracy =
        report.word_total ? static_cast<double>(report.word_correct) / static_cast<double>(report.word_total) : 0.0;
    return report;
}

std::string EvalReport::to_json() const {
    nlohmann::ordered_json j;
    j["char_precision"] = char_precision;
    j["char_recall"] = char_recall;
    j["char_f1"] = char_f1;
    j["word_accuracy"] = word_accuracy;
    j["char_total"] = char_total;
    j["char_correct"] = char_correct;
    j["word_total"] = word_total;
    j["word_correct"] = word_correct;
    auto errs = nlohmann::ordered_json::array();
    for (const auto& e : errors) {
        errs.push_back({{"input", e.input}, {"output", e.output}, {"expected", e.expected}});
    }
    j["errors"] = std::move(errs);
    return j.dump(2) + '\n';
}

std::string EvalReport::to_tsv() const {
    std::ostringstream out;
    out.precision(17);
    out << "char_precision\t" << char_precision << '\n'
        << "char_recall\t" << char_recall << '\n'
        << "char_f1\t" << char_f1 << '\n'
        << "word_accuracy\t" << word_accuracy << '\n'
        << "char_total\t" << char_total << '\n'
        << "char_correct\t" << char_correct << '\n'
        << "word_total\t" << word_total << '\n'
        << "word_correct\t" << word_correct << '\n'
        << "# input\toutput\texpected\n";
    for (const auto& e : errors) {
        out << e.input << '\t' << e.output << '\t' << e.expected << '\n';
    }
    return out.str();
}

CharCounts score_samples(const TranslitModel& model, std::span<const Sample> samples) {
    CharCounts counts;
    for (const auto& s : samples) {
        counts.correct += model.predict(s.features) == s.label;
        ++counts.total;
    }
    return counts;
}

CharCounts score_part(const TranslitModel& model, const Corpus& part, const MappingTable& table) {
    std::vector<AlignmentFailure> skipped;
    const auto samples = corpus_samples(part.pairs(model.direction), model.window, table, &skipped);
    CharCounts counts = score_samples(model, samples);
    for (const auto& f : skipped) {
        counts.total += unicode::decode(f.pair.source).size();
    }
    return counts;
}

// ---------------------------------------------------------------------------

double RoundTripReport::fraction() const {
    return total ? static_cast<double>(recovered) / static_cast<double>(total) : 1.0;
}

RoundTripReport round_trip_check(const TranslitModel& forward, const TranslitModel& back,
                                 std::span<const std::string> words) {
    if (forward.direction.reversed() != back.direction) {
        throw DirectionMismatch("round trip needs opposite directions, got " + forward.direction.tag() + " and " +
                                back.direction.tag());
    }
    RoundTripReport report;
    for (const auto& w : words) {
        const std::string there = transliterate_word(forward, w);
        std::string again = transliterate_word(back, there);
        ++report.total;
        if (again == w) {
            ++report.recovered;
        } else {
            report.failures.push_back({w, there, std::move(again)});
        }
    }
    return report;
}

}  // namespace translit
