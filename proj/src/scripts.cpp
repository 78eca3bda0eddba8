#include "translit/scripts.hpp"

#include "translit/error.hpp"
#include "translit/io.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include <openssl/evp.h>

namespace translit {

Direction Direction::parse(std::string_view tag) {
    const auto sep = tag.find('2');
    if (sep == std::string_view::npos || sep == 0 || sep + 1 == tag.size() ||
        tag.find('2', sep + 1) != std::string_view::npos) {
        throw InvalidArgument("bad direction '" + std::string(tag) + "' (expected e.g. cyr2lat)");
    }
    Direction d{std::string(tag.substr(0, sep)), std::string(tag.substr(sep + 1))};
    if (d.source == d.target) {
        throw InvalidArgument("direction source and target are the same script");
    }
    return d;
}

std::string normalize_word(std::string_view word, const NormalizationPolicy& policy) {
    std::u32string cps = unicode::decode(unicode::to_nfc(word));
    for (char32_t& cp : cps) {
        if (policy.apostrophe_variants.find(cp) != std::u32string::npos) {
            cp = kCanonicalApostrophe;
        }
    }
    std::string out = unicode::encode(cps);
    if (policy.case_folding) {
        out = unicode::to_lower(out);
    }
    return unicode::to_nfc(out);
}

// ---------------------------------------------------------------------------

ScriptSpec::ScriptSpec(std::string name, std::vector<CasePair> letters)
    : name_(std::move(name)), letters_(std::move(letters)) {
    std::set<std::string> seen;
    for (const auto& pair : letters_) {
        for (const std::string* form : {&pair.upper, &pair.lower}) {
            const auto n = unicode::decode(*form).size();
            if (n < 1 || n > 2) {
                throw InvalidArgument("letter '" + *form + "' in script " + name_ +
                                      " must be one or two code points");
            }
        }
        if (!seen.insert(pair.lower).second) {
            throw InvalidArgument("duplicate letter '" + pair.lower + "' in script " + name_);
        }
    }
}

bool ScriptSpec::contains(std::string_view letter) const {
    return std::any_of(letters_.begin(), letters_.end(),
                       [&](const CasePair& p) { return p.upper == letter || p.lower == letter; });
}

ScriptSpec parse_script_spec(std::string_view text, std::string name, const std::string& source_label) {
    std::vector<CasePair> letters;
    const auto lines = io::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        if (io::trim(line).empty() || line.front() == '#') {
            continue;
        }
        const auto fields = io::split(line, '\t');
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw ParseError(source_label, i + 1, "expected 'UPPER<TAB>lower'");
        }
        letters.push_back({unicode::to_nfc(fields[0]), unicode::to_nfc(fields[1])});
    }
    try {
        return ScriptSpec(std::move(name), std::move(letters));
    } catch (const InvalidArgument& e) {
        throw ParseError(source_label, 0, e.what());
    }
}

ScriptSpec load_script_spec(const std::filesystem::path& path, std::string name) {
    return parse_script_spec(io::read_file(path), std::move(name), path.string());
}

std::string format_script_spec(const ScriptSpec& spec) {
    std::string out;
    for (const auto& p : spec.case_pairs()) {
        out += p.upper + '\t' + p.lower + '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------

void sort_candidates(std::vector<std::string>& candidates) {
    std::sort(candidates.begin(), candidates.end(), [](const std::string& a, const std::string& b) {
        const auto ua = unicode::decode(a);
        const auto ub = unicode::decode(b);
        if (ua.size() != ub.size()) {
            return ua.size() > ub.size();
        }
        return ua < ub;
    });
}

namespace {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

std::string render_candidate(const std::string& c) { return c.empty() ? std::string(kEmptyMark) : c; }

}  // namespace

MappingTable::MappingTable(Direction direction, Entries entries)
    : direction_(std::move(direction)), entries_(std::move(entries)) {
    for (auto& [key, cands] : entries_) {
        if (cands.empty()) {
            throw InvalidArgument("empty candidate list for '" + unicode::encode(key) + "'");
        }
        sort_candidates(cands);
        if (std::adjacent_find(cands.begin(), cands.end()) != cands.end()) {
            throw InvalidArgument("duplicate candidate for '" + unicode::encode(key) + "'");
        }
    }
    fingerprint_ = sha256_hex(direction_.tag() + '\n' + format_mapping_table(*this));
}

const std::vector<std::string>* MappingTable::candidates(char32_t source) const {
    const auto it = entries_.find(source);
    return it == entries_.end() ? nullptr : &it->second;
}

MappingTable parse_mapping_table(std::string_view text, Direction direction, const std::string& source_label) {
    MappingTable::Entries entries;
    const auto lines = io::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const std::string_view line = lines[i];
        if (io::trim(line).empty() || line.front() == '#') {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError(source_label, lineno, "expected '<source-char><TAB><candidates>'");
        }
        std::u32string key;
        try {
            key = unicode::decode(normalize_word(line.substr(0, tab)));
        } catch (const InvalidArgument& e) {
            throw ParseError(source_label, lineno, e.what());
        }
        if (key.size() != 1) {
            throw ParseError(source_label, lineno,
                             "key '" + std::string(line.substr(0, tab)) + "' is not a single character");
        }
        std::vector<std::string> cands;
        for (std::string_view raw : io::split(line.substr(tab + 1), ',')) {
            const std::string_view token = io::trim(raw);
            if (token.empty()) {
                throw ParseError(source_label, lineno, "empty candidate (write ∅ for the empty string)");
            }
            std::string cand = token == kEmptyMark ? std::string() : normalize_word(token);
            if (std::find(cands.begin(), cands.end(), cand) != cands.end()) {
                throw ParseError(source_label, lineno, "duplicate candidate '" + render_candidate(cand) + "'");
            }
            cands.push_back(std::move(cand));
        }
        if (!entries.emplace(key.front(), std::move(cands)).second) {
            throw ParseError(source_label, lineno, "duplicate key '" + unicode::encode(key) + "'");
        }
    }
    return MappingTable(std::move(direction), std::move(entries));
}

MappingTable load_mapping_table(const std::filesystem::path& path, Direction direction) {
    return parse_mapping_table(io::read_file(path), std::move(direction), path.string());
}

std::string format_mapping_table(const MappingTable& table) {
    std::string out;
    for (const auto& [key, cands] : table.entries()) {
        out += unicode::encode(key);
        out += '\t';
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += render_candidate(cands[i]);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("TRANSLIT_DATA_DIR"); env && *env) {
        return env;
    }
    return TRANSLIT_DATA_DIR;
}

MappingTable bundled_mapping_table(const Direction& direction) {
    return load_mapping_table(data_dir() / (direction.tag() + ".table"), direction);
}

ScriptSpec bundled_cyrillic_script() { return load_script_spec(data_dir() / "cyrillic.script", "cyrillic"); }
ScriptSpec bundled_latin_script() { return load_script_spec(data_dir() / "latin.script", "latin"); }

}  // namespace translit
