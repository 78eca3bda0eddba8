#pragma once

// Context-window samples: for each source character, the x characters before
// it, the character itself and the y characters after it, padded with a
// reserved sentinel where the word runs out.

#include "translit/aligner.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace translit {

/// A feature value: a code point or the padding sentinel. The sentinel sits
/// above the Unicode range, so it sorts after every real character and can
/// never equal one.
class Symbol {
public:
    static constexpr char32_t kPadValue = 0x110000;

    constexpr Symbol() = default;
    constexpr explicit Symbol(char32_t cp) : value_(cp) {}

    static constexpr Symbol pad() { return Symbol(kPadValue); }

    constexpr bool is_pad() const noexcept { return value_ == kPadValue; }
    constexpr char32_t value() const noexcept { return value_; }

    /// UTF-8 of the character, or "∅" for padding (debug rendering only).
    std::string to_string() const;

    constexpr auto operator<=>(const Symbol&) const = default;

private:
    char32_t value_ = kPadValue;
};

struct WindowSpec {
    static constexpr int kMaxContext = 10;

    int x = 0;
    int y = 0;

    /// Throws InvalidArgument unless 0 <= x, y <= 10.
    static WindowSpec checked(int x, int y);

    std::size_t width() const noexcept { return static_cast<std::size_t>(x + 1 + y); }

    auto operator<=>(const WindowSpec&) const = default;
};

struct Sample {
    std::vector<Symbol> features;
    std::string label;

    auto operator<=>(const Sample&) const = default;
};

/// Feature vector for position `i` of `word`; the focus character lands at index x.
std::vector<Symbol> extract_window(std::u32string_view word, std::size_t i, WindowSpec window);

/// One sample per source character, in word order, labelled with its segment.
std::vector<Sample> extract_samples(const AlignedPair& pair, WindowSpec window);

/// Drops exact (features, label) repeats, keeping first occurrences in order.
std::vector<Sample> dedup_samples(std::span<const Sample> samples);

/// TSV dump: features joined by '|', TAB, label (∅ for the empty class).
std::string format_sample_dump(std::span<const Sample> samples);

}  // namespace translit
