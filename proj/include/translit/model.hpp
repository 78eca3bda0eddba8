#pragma once

#include "translit/dtree.hpp"
#include "translit/featurizer.hpp"
#include "translit/scripts.hpp"

#include <span>
#include <string>
#include <string_view>

namespace translit {

/// A trained tree stamped with everything needed to use it: the window it was
/// trained with, the conversion direction, the fingerprint of the mapping
/// table used for alignment, and the source characters it has seen in focus
/// position (anything else passes through transliteration unchanged).
struct TranslitModel {
    static constexpr int kFormatVersion = 1;

    DecisionTree tree;
    WindowSpec window;
    Direction direction;
    std::string table_fingerprint;
    std::u32string source_alphabet;  // sorted, unique
    int format_version = kFormatVersion;

    /// Throws WidthMismatch if `features` is not window.width() wide.
    const std::string& predict(std::span<const Symbol> features) const;

    bool knows(char32_t source_char) const;

    bool operator==(const TranslitModel&) const = default;
};

/// Fits a tree to `samples`; all vectors must be `window.width()` wide.
/// Throws TrainingError.
TranslitModel train(std::span<const Sample> samples, WindowSpec window, Direction direction,
                    std::string table_fingerprint = {});

/// Versioned JSON document (see README for the schema). Byte-identical for
/// identical models.
std::string serialize(const TranslitModel& model);

/// Throws ModelFormatError: VersionMismatch for a format_version this build
/// does not read, Corrupt for anything malformed or truncated.
TranslitModel deserialize(std::string_view bytes);

TranslitModel load_model(const std::filesystem::path& path);
void save_model(const TranslitModel& model, const std::filesystem::path& path);

}  // namespace translit
