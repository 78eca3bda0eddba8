#pragma once

// Character alignment of a source word against its target-script counterpart.
//
// Every source code point is paired with a (possibly empty) substring of the
// target word, drawn from the mapping table, so that the substrings tile the
// target exactly. The search is a depth-first walk over source positions that
// tries each character's candidates in the table's canonical order (longest
// first) and returns the first complete tiling. Failed (source, target)
// offsets are memoized, so the walk is polynomial in word length.

#include "translit/error.hpp"
#include "translit/scripts.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace translit {

struct WordPair {
    std::string source;
    std::string target;

    bool operator==(const WordPair&) const = default;
};

struct AlignedPair {
    std::u32string source_chars;
    std::vector<std::string> target_segments;
    Direction direction;

    std::string source_word() const;
    std::string target_word() const;

    bool operator==(const AlignedPair&) const = default;
};

/// Why a pair could not be aligned. `position` is the deepest source index
/// the search reached without being able to extend; it equals the source
/// length when every character was placed but target text was left over.
/// For UnknownSourceChar it is the first character missing from the table.
struct AlignmentFailure {
    WordPair pair;
    std::size_t position = 0;
    AlignmentError::Kind kind = AlignmentError::Kind::NoAlignment;

    bool operator==(const AlignmentFailure&) const = default;
};

using AlignOutcome = std::variant<AlignedPair, AlignmentFailure>;

/// Non-throwing form of align_word.
AlignOutcome try_align_word(std::string_view source, std::string_view target, const MappingTable& table);

/// Throws AlignmentError (NoAlignment / UnknownSourceChar), or
/// InvalidArgument for an empty source word.
AlignedPair align_word(std::string_view source, std::string_view target, const MappingTable& table);

struct CorpusAlignment {
    std::vector<AlignedPair> alignments;
    std::vector<AlignmentFailure> failures;
};

/// Aligns every pair; failures are collected, never thrown. Output order
/// follows input order.
CorpusAlignment align_corpus(std::span<const WordPair> pairs, const MappingTable& table);

/// `<source><TAB><target><TAB><fail-position>` per failure.
std::string format_failure_report(std::span<const AlignmentFailure> failures);

/// `<source><TAB><target><TAB>seg|seg|...` with ∅ for empty segments.
std::string format_alignment(const AlignedPair& pair);

}  // namespace translit
