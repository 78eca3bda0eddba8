#include "translit/featurizer.hpp"

#include "translit/unicode.hpp"

#include <set>

namespace translit {

std::string Symbol::to_string() const {
    return is_pad() ? std::string(kEmptyMark) : unicode::encode(value_);
}

WindowSpec WindowSpec::checked(int x, int y) {
    if (x < 0 || x > kMaxContext || y < 0 || y > kMaxContext) {
        throw InvalidArgument("window x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                              " outside [0, " + std::to_string(kMaxContext) + "]");
    }
    return {x, y};
}

std::vector<Symbol> extract_window(std::u32string_view word, std::size_t i, WindowSpec window) {
    std::vector<Symbol> features;
    features.reserve(window.width());
    const auto pos = static_cast<std::ptrdiff_t>(i);
    const auto len = static_cast<std::ptrdiff_t>(word.size());
    for (std::ptrdiff_t k = pos - window.x; k <= pos + window.y; ++k) {
        features.push_back(k < 0 || k >= len ? Symbol::pad() : Symbol(word[static_cast<std::size_t>(k)]));
    }
    return features;
}

std::vector<Sample> extract_samples(const AlignedPair& pair, WindowSpec window) {
    std::vector<Sample> samples;
    samples.reserve(pair.source_chars.size());
    for (std::size_t i = 0; i < pair.source_chars.size(); ++i) {
        samples.push_back({extract_window(pair.source_chars, i, window), pair.target_segments[i]});
    }
    return samples;
}

std::vector<Sample> dedup_samples(std::span<const Sample> samples) {
    std::set<const Sample*, decltype([](const Sample* a, const Sample* b) { return *a < *b; })> seen;
    std::vector<Sample> out;
    for (const auto& s : samples) {
        if (seen.insert(&s).second) {
            out.push_back(s);
        }
    }
    return out;
}

std::string format_sample_dump(std::span<const Sample> samples) {
    std::string out;
    for (const auto& s : samples) {
        for (std::size_t i = 0; i < s.features.size(); ++i) {
            if (i) {
                out += '|';
            }
            out += s.features[i].to_string();
        }
        out += '\t';
        out += s.label.empty() ? std::string(kEmptyMark) : s.label;
        out += '\n';
    }
    return out;
}

}  // namespace translit
