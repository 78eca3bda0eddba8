#pragma once

// Small helpers shared by the test binaries.

#include "translit/dtree.hpp"
#include "translit/featurizer.hpp"
#include "translit/unicode.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace translit::testing {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(TRANSLIT_FIXTURE_DIR) / name; }

/// U+2205 stands for padding here; every other code point is itself.
inline std::vector<Symbol> syms(std::u32string_view s) {
    std::vector<Symbol> out;
    for (const char32_t c : s) {
        out.push_back(c == U'∅' ? Symbol::pad() : Symbol(c));
    }
    return out;
}

inline Sample sample(std::u32string_view features, std::string label) { return {syms(features), std::move(label)}; }

/// Random feature vectors over a small alphabet (PAD included) so that
/// equality tests actually bite.
inline std::vector<Symbol> random_vector(std::mt19937_64& rng, std::size_t width, std::u32string_view alphabet) {
    std::vector<Symbol> v;
    for (std::size_t k = 0; k < width; ++k) {
        const std::size_t pick = rng() % (alphabet.size() + 1);
        v.push_back(pick == alphabet.size() ? Symbol::pad() : Symbol(alphabet[pick]));
    }
    return v;
}

inline std::vector<Sample> random_samples(std::mt19937_64& rng, std::size_t n, std::size_t width,
                                          std::u32string_view alphabet, const std::vector<std::string>& labels) {
    std::vector<Sample> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({random_vector(rng, width, alphabet), labels[rng() % labels.size()]});
    }
    return out;
}

// Straightforward reference: try every (position, symbol) test, tally both
// sides with maps and score them with the textbook formula.
inline double oracle_decrease(std::span<const Sample> samples, std::size_t f, Symbol s) {
    ClassCounts all, left, right;
    for (const auto& x : samples) {
        ++all[x.label];
        ++(x.features[f] == s ? left : right)[x.label];
    }
    const auto total = [](const ClassCounts& c) {
        std::size_t n = 0;
        for (const auto& [k, v] : c) n += v;
        return static_cast<double>(n);
    };
    const double n = total(all), nl = total(left), nr = total(right);
    if (nl == 0 || nr == 0) return -1.0;
    return gini(all) - nl / n * gini(left) - nr / n * gini(right);
}

inline double oracle_max(std::span<const Sample> samples) {
    double best = -1.0;
    for (std::size_t f = 0; f < samples.front().features.size(); ++f) {
        for (const auto& x : samples) {
            best = std::max(best, oracle_decrease(samples, f, x.features[f]));
        }
    }
    return best;
}

}  // namespace translit::testing
