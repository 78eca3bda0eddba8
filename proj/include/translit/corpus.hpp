#pragma once

// Parallel word lists and their deterministic train/validation/test split.

#include "translit/aligner.hpp"
#include "translit/scripts.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace translit {

struct CorpusEntry {
    std::string cyrillic;
    std::string latin;

    bool operator==(const CorpusEntry&) const = default;
};

/// Normalized word pairs. Words contain only letters, hyphens and the
/// canonical apostrophe.
struct Corpus {
    std::vector<CorpusEntry> entries;
    std::string provenance;

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }

    /// (source, target) pairs for `direction` ("cyr" / "lat" scripts).
    std::vector<WordPair> pairs(const Direction& direction) const;
};

/// True if `word` is non-empty and made only of letters, '-' and '\''.
bool is_corpus_word(std::string_view word);

/// `cyrillic<TAB>latin` per line, `#` comments and blank lines skipped.
/// Words are normalized on the way in. Throws ParseError with the line number
/// on malformed rows or words that are not corpus words.
Corpus parse_corpus(std::string_view text, const std::string& source_label = "<corpus>");
Corpus load_corpus(const std::filesystem::path& path);
std::string format_corpus(const Corpus& corpus);

struct SplitConfig {
    double train_fraction = 0.70;
    double validation_fraction = 0.15;
    double test_fraction = 0.15;
    std::uint64_t seed = 42;

    /// Fractions must each lie in (0, 1) and sum to 1 within kSumTolerance.
    static constexpr double kSumTolerance = 1e-3;
    void validate() const;
};

struct SplitSizes {
    std::size_t train = 0;
    std::size_t validation = 0;
    std::size_t test = 0;

    bool operator==(const SplitSizes&) const = default;
};

/// floor(fraction * n) per part; the leftover items go one at a time to
/// train, validation, test, train, ... Throws InvalidArgument if a part
/// would be empty.
SplitSizes split_sizes(std::size_t n, const SplitConfig& config);

/// Fisher-Yates from the back: for i = n-1 .. 1, swap item i with item
/// j = mt19937_64() mod (i + 1). mt19937_64 output is fixed by the C++
/// standard, so the permutation is reproducible everywhere.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

struct CorpusSplit {
    Corpus train;
    Corpus validation;
    Corpus test;
};

/// Shuffles with `config.seed`, then cuts contiguous parts of split_sizes().
CorpusSplit split_corpus(const Corpus& corpus, const SplitConfig& config);

}  // namespace translit
