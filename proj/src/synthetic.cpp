#include "translit/synthetic.hpp"

#include "translit/error.hpp"
#include "translit/unicode.hpp"

#include <random>
#include <unordered_set>

namespace translit {

namespace {

constexpr std::u32string_view kVowels = U"аэеяюё";
// й is placed only as a syllable coda.
constexpr std::u32string_view kConsonants = U"бвгджзклмнпртфхшғқҳц";

bool is_vowel(char32_t c) { return kVowels.find(c) != std::u32string_view::npos; }

std::string_view plain_latin(char32_t c) {
    switch (c) {
    case U'а': return "a";
    case U'б': return "b";
    case U'в': return "v";
    case U'г': return "g";
    case U'д': return "d";
    case U'ж': return "j";
    case U'з': return "z";
    case U'й': return "y";
    case U'к': return "k";
    case U'л': return "l";
    case U'м': return "m";
    case U'н': return "n";
    case U'п': return "p";
    case U'р': return "r";
    case U'т': return "t";
    case U'ф': return "f";
    case U'х': return "x";
    case U'ш': return "sh";
    case U'ғ': return "g'";
    case U'қ': return "q";
    case U'ҳ': return "h";
    case U'э': return "e";
    case U'я': return "ya";
    case U'ю': return "yu";
    case U'ё': return "yo";
    default: return {};
    }
}

bool admissible(std::u32string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        const char32_t c = w[i];
        const char32_t next = i + 1 < w.size() ? w[i + 1] : U'\0';
        if (c == U'э' && i != 0) {
            return false;
        }
        if (c == U'й' && (i == 0 || !is_vowel(w[i - 1]) || is_vowel(next))) {
            return false;
        }
        if (c == U'т' && (next == U'ц' || next == U'ш')) {
            return false;
        }
        if (c == U'ц' && next == U'ҳ') {
            return false;
        }
    }
    return true;
}

class WordMaker {
public:
    explicit WordMaker(std::uint64_t seed) : rng_(seed) {}

    std::u32string make() {
        for (;;) {
            std::u32string w;
            const std::size_t syllables = 1 + pick(3);
            for (std::size_t s = 0; s < syllables; ++s) {
                const bool bare_vowel = s == 0 && pick(4) == 0;
                if (!bare_vowel) {
                    w += kConsonants[pick(kConsonants.size())];
                }
                // э only ever opens a word.
                const std::u32string_view nuclei = w.empty() ? kVowels : U"аеяюё";
                w += nuclei[pick(nuclei.size())];
                if (pick(3) == 0) {
                    w += pick(4) == 0 ? U'й' : kConsonants[pick(kConsonants.size())];
                }
            }
            if (w.size() >= 2 && admissible(w)) {
                return w;
            }
        }
    }

private:
    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    std::mt19937_64 rng_;
};

}  // namespace

std::string romanize_generated(std::u32string_view w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const char32_t c = w[i];
        const bool after_vowel = i > 0 && is_vowel(w[i - 1]);
        if (c == U'ц') {
            const bool inner = i > 0 && i + 1 < w.size();
            out += inner && after_vowel ? "ts" : "s";
        } else if (c == U'е') {
            out += i == 0 || after_vowel ? "ye" : "e";
        } else {
            const auto latin = plain_latin(c);
            if (latin.empty()) {
                throw InvalidArgument("'" + unicode::encode(c) + "' is outside the generator alphabet");
            }
            out += latin;
        }
    }
    return out;
}

Corpus gen_corpus(std::size_t size, std::uint64_t seed) {
    if (size == 0) {
        throw InvalidArgument("gen_corpus needs size > 0");
    }
    Corpus corpus;
    corpus.provenance = "synthetic (seed " + std::to_string(seed) + ")";
    WordMaker maker(seed);
    std::unordered_set<std::u32string> seen;
    while (corpus.entries.size() < size) {
        std::u32string w = maker.make();
        if (seen.insert(w).second) {
            corpus.entries.push_back({unicode::encode(w), romanize_generated(w)});
        }
    }
    return corpus;
}

}  // namespace translit
