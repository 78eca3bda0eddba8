#pragma once

// Training, inference, scoring and hyperparameter search on top of the
// aligner, featurizer and tree.

#include "translit/corpus.hpp"
#include "translit/model.hpp"

#include <span>
#include <string>
#include <vector>

namespace translit {

// ---------------------------------------------------------------------------
// Training

struct TrainOutcome {
    TranslitModel model;
    std::vector<AlignmentFailure> skipped;  ///< unalignable training pairs
    std::size_t sample_count = 0;           ///< after deduplication
};

/// align -> extract -> dedup -> train. Unalignable pairs are skipped and
/// reported. Throws TrainingError(AllPairsUnalignable) when nothing aligns
/// (including an empty part) and DirectionMismatch if the table runs the
/// other way.
TrainOutcome train_direction(const Corpus& train, WindowSpec window, const MappingTable& table,
                             const Direction& direction);

/// Deduplicated samples of every alignable pair; failures appended to `skipped` when given.
std::vector<Sample> corpus_samples(std::span<const WordPair> pairs, WindowSpec window, const MappingTable& table,
                                   std::vector<AlignmentFailure>* skipped = nullptr);

// ---------------------------------------------------------------------------
// Inference

/// Transliterates one normalized word character by character. Characters the
/// model never saw in focus position are copied to the output unchanged.
std::string transliterate_word(const TranslitModel& model, std::string_view word);

/// The per-character predictions behind transliterate_word.
std::vector<std::string> predict_segments(const TranslitModel& model, std::u32string_view word);

enum class WordCase { Lower, Capitalized, Upper };

WordCase detect_case(std::string_view word);
std::string apply_case(std::string_view lower_word, WordCase word_case);

/// Runs over free text: every run of letters, apostrophes and inner hyphens is
/// normalized, transliterated and given back its original capitalization
/// (all caps, initial capital or lowercase); everything else is copied.
std::string transliterate_text(const TranslitModel& model, std::string_view text);

// ---------------------------------------------------------------------------
// Scoring

/// Character-level tallies. With exactly one prediction per character every
/// wrong prediction is both a false positive and a false negative, so the
/// micro-averaged precision, recall and F1 coincide.
struct CharCounts {
    std::size_t correct = 0;
    std::size_t total = 0;

    double precision() const;
    double recall() const;
    double f1() const;

    CharCounts& operator+=(const CharCounts& o) {
        correct += o.correct;
        total += o.total;
        return *this;
    }
};

struct EvalError {
    std::string input;
    std::string output;
    std::string expected;

    bool operator==(const EvalError&) const = default;
};

struct EvalReport {
    double char_precision = 0.0;
    double char_recall = 0.0;
    double char_f1 = 0.0;
    double word_accuracy = 0.0;
    std::size_t char_total = 0;
    std::size_t char_correct = 0;
    std::size_t word_total = 0;
    std::size_t word_correct = 0;
    std::vector<EvalError> errors;

    std::string to_json() const;
    std::string to_tsv() const;
};

/// Scores each source character's predicted segment against its aligned gold
/// segment. Pairs the table cannot align count as wrong words with every
/// character wrong.
EvalReport evaluate(const TranslitModel& model, const Corpus& heldout, const MappingTable& table);

/// Tallies predictions over an already-extracted sample set.
CharCounts score_samples(const TranslitModel& model, std::span<const Sample> samples);

// ---------------------------------------------------------------------------
// Hyperparameter search

struct GridRange {
    int min = 0;
    int max = WindowSpec::kMaxContext;
};

struct GridCell {
    WindowSpec window;
    double validation_f1 = 0.0;
};

struct GridResult {
    WindowSpec best;
    double best_f1 = 0.0;
    std::vector<GridCell> cells;  ///< ordered by (x, y)
    TranslitModel best_model;

    std::string to_tsv() const;
};

/// Trains one model per (x, y) cell and scores it on the deduplicated
/// validation samples; unalignable validation pairs count every character
/// wrong. Best cell: highest F1, then smallest x + y, then smallest x.
/// Cells run on up to `threads` threads (0 = hardware concurrency); the
/// result does not depend on the thread count.
GridResult grid_search(const Corpus& train, const Corpus& validation, const MappingTable& table,
                       const Direction& direction, GridRange xs, GridRange ys, unsigned threads = 0);

/// Validation-style score of `model` on `part`: deduplicated samples at the
/// model's window, unalignable pairs counted as all wrong.
CharCounts score_part(const TranslitModel& model, const Corpus& part, const MappingTable& table);

// ---------------------------------------------------------------------------
// Round trip

struct RoundTripFailure {
    std::string word;
    std::string forward;
    std::string back;

    bool operator==(const RoundTripFailure&) const = default;
};

struct RoundTripReport {
    std::size_t total = 0;
    std::size_t recovered = 0;
    std::vector<RoundTripFailure> failures;

    /// recovered / total; 1.0 for an empty word list.
    double fraction() const;
};

/// back(forward(w)) == w for each word. Throws DirectionMismatch unless the
/// models run in opposite directions.
RoundTripReport round_trip_check(const TranslitModel& forward, const TranslitModel& back,
                                 std::span<const std::string> words);

}  // namespace translit
