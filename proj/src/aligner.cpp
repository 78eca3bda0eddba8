#include "translit/aligner.hpp"

#include "translit/unicode.hpp"

#include <algorithm>
#include <map>

namespace translit {

std::string AlignedPair::source_word() const { return unicode::encode(source_chars); }

std::string AlignedPair::target_word() const {
    std::string out;
    for (const auto& seg : target_segments) {
        out += seg;
    }
    return out;
}

namespace {

class Search {
public:
    Search(const std::u32string& source, const std::u32string& target,
           const std::vector<const std::vector<std::u32string>*>& candidates)
        : source_(source), target_(target), candidates_(candidates),
          dead_((source.size() + 1) * (target.size() + 1), false),
          chosen_(source.size(), nullptr) {}

    bool run() { return extend(0, 0); }

    std::size_t deepest() const { return deepest_; }

    std::vector<const std::u32string*> choices() const { return chosen_; }

private:
    bool extend(std::size_t i, std::size_t j) {
        deepest_ = std::max(deepest_, i);
        if (i == source_.size()) {
            return j == target_.size();
        }
        auto slot = dead_.begin() + static_cast<std::ptrdiff_t>(i * (target_.size() + 1) + j);
        if (*slot) {
            return false;
        }
        for (const auto& cand : *candidates_[i]) {
            if (j + cand.size() <= target_.size() && target_.compare(j, cand.size(), cand) == 0) {
                chosen_[i] = &cand;
                if (extend(i + 1, j + cand.size())) {
                    return true;
                }
            }
        }
        *slot = true;
        return false;
    }

    const std::u32string& source_;
    const std::u32string& target_;
    const std::vector<const std::vector<std::u32string>*>& candidates_;
    std::vector<bool> dead_;
    std::vector<const std::u32string*> chosen_;
    std::size_t deepest_ = 0;
};

}  // namespace

AlignOutcome try_align_word(std::string_view source, std::string_view target, const MappingTable& table) {
    const std::u32string src = unicode::decode(source);
    if (src.empty()) {
        throw InvalidArgument("cannot align an empty source word");
    }
    const std::u32string tgt = unicode::decode(target);
    WordPair pair{std::string(source), std::string(target)};

    // Decoded candidate lists, one per distinct source character.
    std::map<char32_t, std::vector<std::u32string>> decoded;
    std::vector<const std::vector<std::u32string>*> per_char(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto* cands = table.candidates(src[i]);
        if (!cands) {
            return AlignmentFailure{std::move(pair), i, AlignmentError::Kind::UnknownSourceChar};
        }
        auto [it, inserted] = decoded.try_emplace(src[i]);
        if (inserted) {
            for (const auto& c : *cands) {
                it->second.push_back(unicode::decode(c));
            }
        }
        per_char[i] = &it->second;
    }

    Search search(src, tgt, per_char);
    if (!search.run()) {
        return AlignmentFailure{std::move(pair), search.deepest(), AlignmentError::Kind::NoAlignment};
    }
    AlignedPair out{src, {}, table.direction()};
    out.target_segments.reserve(src.size());
    for (const auto* seg : search.choices()) {
        out.target_segments.push_back(unicode::encode(*seg));
    }
    return out;
}

AlignedPair align_word(std::string_view source, std::string_view target, const MappingTable& table) {
    auto outcome = try_align_word(source, target, table);
    if (auto* failure = std::get_if<AlignmentFailure>(&outcome)) {
        const bool unknown = failure->kind == AlignmentError::Kind::UnknownSourceChar;
        std::string what = unknown ? "source character at position " + std::to_string(failure->position) +
                                         " of '" + failure->pair.source + "' is not in the mapping table"
                                   : "no alignment of '" + failure->pair.source + "' with '" +
                                         failure->pair.target + "' (stuck at position " +
                                         std::to_string(failure->position) + ")";
        throw AlignmentError(failure->kind, failure->position, what);
    }
    return std::get<AlignedPair>(std::move(outcome));
}

CorpusAlignment align_corpus(std::span<const WordPair> pairs, const MappingTable& table) {
    CorpusAlignment result;
    for (const auto& p : pairs) {
        if (p.source.empty()) {
            result.failures.push_back({p, 0, AlignmentError::Kind::NoAlignment});
            continue;
        }
        auto outcome = try_align_word(p.source, p.target, table);
        if (auto* aligned = std::get_if<AlignedPair>(&outcome)) {
            result.alignments.push_back(std::move(*aligned));
        } else {
            result.failures.push_back(std::get<AlignmentFailure>(std::move(outcome)));
        }
    }
    return result;
}

std::string format_failure_report(std::span<const AlignmentFailure> failures) {
    std::string out;
    for (const auto& f : failures) {
        out += f.pair.source + '\t' + f.pair.target + '\t' + std::to_string(f.position) + '\n';
    }
    return out;
}

std::string format_alignment(const AlignedPair& pair) {
    std::string out = pair.source_word() + '\t' + pair.target_word() + '\t';
    for (std::size_t i = 0; i < pair.target_segments.size(); ++i) {
        if (i) {
            out += '|';
        }
        const auto& seg = pair.target_segments[i];
        out += seg.empty() ? std::string(kEmptyMark) : seg;
    }
    return out + '\n';
}

}  // namespace translit
