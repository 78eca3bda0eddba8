#include "translit/corpus.hpp"

#include "translit/error.hpp"
#include "translit/io.hpp"
#include "translit/unicode.hpp"

#include <cmath>

namespace translit {

std::vector<WordPair> Corpus::pairs(const Direction& direction) const {
    const bool from_cyr = direction.source == "cyr" && direction.target == "lat";
    const bool from_lat = direction.source == "lat" && direction.target == "cyr";
    if (!from_cyr && !from_lat) {
        throw InvalidArgument("corpus holds cyr/lat pairs, not " + direction.tag());
    }
    std::vector<WordPair> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back(from_cyr ? WordPair{e.cyrillic, e.latin} : WordPair{e.latin, e.cyrillic});
    }
    return out;
}

bool is_corpus_word(std::string_view word) {
    const auto cps = unicode::decode(word);
    if (cps.empty()) {
        return false;
    }
    for (const char32_t c : cps) {
        if (!unicode::is_letter(c) && c != U'-' && c != kCanonicalApostrophe) {
            return false;
        }
    }
    return true;
}

Corpus parse_corpus(std::string_view text, const std::string& source_label) {
    Corpus corpus;
    corpus.provenance = source_label;
    const auto lines = io::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const std::string_view line = lines[i];
        if (io::trim(line).empty() || line.front() == '#') {
            continue;
        }
        const auto fields = io::split(line, '\t');
        if (fields.size() != 2) {
            throw ParseError(source_label, lineno, "expected 'cyrillic<TAB>latin'");
        }
        CorpusEntry entry;
        try {
            entry = {normalize_word(fields[0]), normalize_word(fields[1])};
        } catch (const InvalidArgument& e) {
            throw ParseError(source_label, lineno, e.what());
        }
        for (const std::string* w : {&entry.cyrillic, &entry.latin}) {
            if (!is_corpus_word(*w)) {
                throw ParseError(source_label, lineno,
                                 "'" + *w + "' is not a single word (only letters, '-' and apostrophe allowed)");
            }
        }
        corpus.entries.push_back(std::move(entry));
    }
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) { return parse_corpus(io::read_file(path), path.string()); }

std::string format_corpus(const Corpus& corpus) {
    std::string out;
    for (const auto& e : corpus.entries) {
        out += e.cyrillic + '\t' + e.latin + '\n';
    }
    return out;
}

void SplitConfig::validate() const {
    for (const double f : {train_fraction, validation_fraction, test_fraction}) {
        if (!(f > 0.0 && f < 1.0)) {
            throw InvalidArgument("split fractions must lie strictly between 0 and 1");
        }
    }
    const double sum = train_fraction + validation_fraction + test_fraction;
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw InvalidArgument("split fractions sum to " + std::to_string(sum) + ", not 1");
    }
}

SplitSizes split_sizes(std::size_t n, const SplitConfig& config) {
    config.validate();
    const auto part = [n](double f) { return static_cast<std::size_t>(std::floor(f * static_cast<double>(n))); };
    SplitSizes sizes{part(config.train_fraction), part(config.validation_fraction), part(config.test_fraction)};
    std::size_t assigned = sizes.train + sizes.validation + sizes.test;
    if (assigned > n) {
        throw InvalidArgument("split fractions over-allocate the corpus");
    }
    std::size_t* order[] = {&sizes.train, &sizes.validation, &sizes.test};
    for (std::size_t k = 0; assigned < n; ++k, ++assigned) {
        ++*order[k % 3];
    }
    if (sizes.train == 0 || sizes.validation == 0 || sizes.test == 0) {
        throw InvalidArgument("split of " + std::to_string(n) + " items leaves an empty part");
    }
    return sizes;
}

CorpusSplit split_corpus(const Corpus& corpus, const SplitConfig& config) {
    if (corpus.empty()) {
        throw InvalidArgument("cannot split an empty corpus");
    }
    const SplitSizes sizes = split_sizes(corpus.size(), config);
    std::vector<CorpusEntry> shuffled = corpus.entries;
    seeded_shuffle(shuffled, config.seed);

    CorpusSplit out;
    const auto seed_tag = " (seed " + std::to_string(config.seed) + ")";
    out.train.provenance = corpus.provenance + " train" + seed_tag;
    out.validation.provenance = corpus.provenance + " validation" + seed_tag;
    out.test.provenance = corpus.provenance + " test" + seed_tag;
    auto it = shuffled.begin();
    const auto take = [&it](Corpus& part, std::size_t count) {
        part.entries.assign(std::make_move_iterator(it), std::make_move_iterator(it + static_cast<std::ptrdiff_t>(count)));
        it += static_cast<std::ptrdiff_t>(count);
    };
    take(out.train, sizes.train);
    take(out.validation, sizes.validation);
    take(out.test, sizes.test);
    return out;
}

}  // namespace translit
