#pragma once

// Alphabets, input normalization and the character mapping tables that seed
// alignment.

#include <compare>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace translit {

/// Conversion direction, identified by short script names ("cyr", "lat").
/// The textual tag is "<source>2<target>", e.g. "cyr2lat".
struct Direction {
    std::string source;
    std::string target;

    static Direction parse(std::string_view tag);
    static Direction cyr2lat() { return {"cyr", "lat"}; }
    static Direction lat2cyr() { return {"lat", "cyr"}; }

    std::string tag() const { return source + "2" + target; }
    Direction reversed() const { return {target, source}; }

    auto operator<=>(const Direction&) const = default;
};

/// Rendering of the empty target string in table files and reports.
inline constexpr std::string_view kEmptyMark = "∅";
inline constexpr char32_t kCanonicalApostrophe = U'\'';

// ---------------------------------------------------------------------------
// Normalization

enum class UnicodeForm { NFC };

struct NormalizationPolicy {
    std::u32string apostrophe_variants = {U'\'', U'‘', U'’', U'`',
                                          U'´', U'ʻ', U'ʼ'};
    bool case_folding = true;
    UnicodeForm unicode_form = UnicodeForm::NFC;
};

/// Canonical composed form, apostrophe variants folded to U+0027, and
/// lowercased when the policy asks for it. Idempotent.
std::string normalize_word(std::string_view word, const NormalizationPolicy& policy = {});

// ---------------------------------------------------------------------------
// Alphabets

struct CasePair {
    std::string upper;
    std::string lower;

    bool operator==(const CasePair&) const = default;
};

/// An alphabet: an ordered set of letters, each one or two code points.
class ScriptSpec {
public:
    ScriptSpec(std::string name, std::vector<CasePair> letters);

    const std::string& name() const noexcept { return name_; }
    const std::vector<CasePair>& case_pairs() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }

    /// True if `letter` (either case) is a letter of this script.
    bool contains(std::string_view letter) const;

    bool operator==(const ScriptSpec&) const = default;

private:
    std::string name_;
    std::vector<CasePair> letters_;
};

/// One letter per line, "UPPER<TAB>lower"; `#` comments and blank lines skipped.
ScriptSpec parse_script_spec(std::string_view text, std::string name, const std::string& source_label = "<script>");
ScriptSpec load_script_spec(const std::filesystem::path& path, std::string name);
std::string format_script_spec(const ScriptSpec& spec);

// ---------------------------------------------------------------------------
// Mapping tables

/// Per source character, the admissible target strings ("" = deletion).
/// Candidate lists are kept in canonical order: longest first, ties by
/// code-point order. That order is the aligner's search order.
class MappingTable {
public:
    using Entries = std::map<char32_t, std::vector<std::string>>;

    MappingTable(Direction direction, Entries entries);

    const Direction& direction() const noexcept { return direction_; }
    const Entries& entries() const noexcept { return entries_; }

    /// nullptr if `source` has no entry.
    const std::vector<std::string>* candidates(char32_t source) const;
    bool contains(char32_t source) const { return entries_.count(source) != 0; }

    /// Hex SHA-256 of the canonical text rendering plus direction.
    const std::string& fingerprint() const noexcept { return fingerprint_; }

private:
    Direction direction_;
    Entries entries_;
    std::string fingerprint_;
};

/// Sorts candidates into canonical order in place.
void sort_candidates(std::vector<std::string>& candidates);

/// `<source-char><TAB><candidate>{,<candidate>}` per line; `∅` is the empty
/// string; `#` starts a comment line. Keys and candidates are normalized.
MappingTable parse_mapping_table(std::string_view text, Direction direction,
                                 const std::string& source_label = "<table>");
MappingTable load_mapping_table(const std::filesystem::path& path, Direction direction);
std::string format_mapping_table(const MappingTable& table);

// ---------------------------------------------------------------------------
// Bundled data

/// $TRANSLIT_DATA_DIR if set, otherwise the data directory of the source tree.
std::filesystem::path data_dir();

MappingTable bundled_mapping_table(const Direction& direction);
ScriptSpec bundled_cyrillic_script();
ScriptSpec bundled_latin_script();

}  // namespace translit
