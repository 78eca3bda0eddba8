#include "translit/model.hpp"

#include "translit/error.hpp"
#include "translit/io.hpp"
#include "translit/unicode.hpp"

#include <json.hpp>

#include <algorithm>

namespace translit {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kPadToken = "∅-PAD";

std::string symbol_to_json(Symbol s) { return s.is_pad() ? std::string(kPadToken) : unicode::encode(s.value()); }

Symbol symbol_from_json(const std::string& text) {
    if (text == kPadToken) {
        return Symbol::pad();
    }
    const auto cps = unicode::decode(text);
    if (cps.size() != 1) {
        throw ModelFormatError(ModelFormatError::Kind::Corrupt, "symbol '" + text + "' is not one character");
    }
    return Symbol(cps.front());
}

Json node_to_json(const DecisionTree& tree, std::size_t i) {
    const auto& node = tree.nodes()[i];
    Json j;
    if (const auto* leaf = std::get_if<DecisionTree::Leaf>(&node)) {
        j["leaf"] = leaf->prediction;
        Json counts = Json::object();
        for (const auto& [label, n] : leaf->class_counts) {
            counts[label] = n;
        }
        j["counts"] = std::move(counts);
        return j;
    }
    const auto& split = std::get<DecisionTree::Split>(node);
    j["f"] = split.feature;
    j["s"] = symbol_to_json(split.symbol);
    j["t"] = node_to_json(tree, split.match);
    j["e"] = node_to_json(tree, split.other);
    return j;
}

std::size_t node_from_json(const Json& j, std::vector<DecisionTree::Node>& nodes, std::size_t width) {
    const std::size_t index = nodes.size();
    if (j.contains("leaf")) {
        DecisionTree::Leaf leaf;
        leaf.prediction = j.at("leaf").get<std::string>();
        for (const auto& [label, n] : j.at("counts").items()) {
            leaf.class_counts.emplace(label, n.get<std::size_t>());
        }
        nodes.emplace_back(std::move(leaf));
        return index;
    }
    DecisionTree::Split split;
    split.feature = j.at("f").get<std::size_t>();
    if (split.feature >= width) {
        throw ModelFormatError(ModelFormatError::Kind::Corrupt, "split feature index out of window");
    }
    split.symbol = symbol_from_json(j.at("s").get<std::string>());
    nodes.emplace_back(split);
    const std::size_t match = node_from_json(j.at("t"), nodes, width);
    const std::size_t other = node_from_json(j.at("e"), nodes, width);
    auto& stored = std::get<DecisionTree::Split>(nodes[index]);
    stored.match = match;
    stored.other = other;
    return index;
}

}  // namespace

const std::string& TranslitModel::predict(std::span<const Symbol> features) const {
    if (features.size() != window.width()) {
        throw WidthMismatch("feature vector has width " + std::to_string(features.size()) + ", model expects " +
                            std::to_string(window.width()));
    }
    return tree.predict(features);
}

bool TranslitModel::knows(char32_t source_char) const {
    return std::binary_search(source_alphabet.begin(), source_alphabet.end(), source_char);
}

TranslitModel train(std::span<const Sample> samples, WindowSpec window, Direction direction,
                    std::string table_fingerprint) {
    for (const auto& s : samples) {
        if (s.features.size() != window.width()) {
            throw TrainingError(TrainingError::Kind::InconsistentFeatureWidth,
                                "sample width " + std::to_string(s.features.size()) + " does not match window " +
                                    std::to_string(window.width()));
        }
    }
    TranslitModel model{DecisionTree::train(samples), window, std::move(direction), std::move(table_fingerprint), {}};
    for (const auto& s : samples) {
        const Symbol focus = s.features[static_cast<std::size_t>(window.x)];
        if (focus.is_pad()) {
            continue;
        }
        model.source_alphabet.push_back(focus.value());
    }
    std::sort(model.source_alphabet.begin(), model.source_alphabet.end());
    model.source_alphabet.erase(std::unique(model.source_alphabet.begin(), model.source_alphabet.end()),
                                model.source_alphabet.end());
    return model;
}

std::string serialize(const TranslitModel& model) {
    Json j;
    j["format_version"] = model.format_version;
    j["direction"] = model.direction.tag();
    j["window"] = {{"x", model.window.x}, {"y", model.window.y}};
    j["table_fingerprint"] = model.table_fingerprint;
    Json alphabet = Json::array();
    for (const char32_t c : model.source_alphabet) {
        alphabet.push_back(unicode::encode(c));
    }
    j["source_alphabet"] = std::move(alphabet);
    j["root"] = node_to_json(model.tree, 0);
    return j.dump() + '\n';
}

TranslitModel deserialize(std::string_view bytes) {
    using Kind = ModelFormatError::Kind;
    try {
        const Json j = Json::parse(bytes);
        if (!j.is_object() || !j.contains("format_version")) {
            throw ModelFormatError(Kind::Corrupt, "not a model document");
        }
        const int version = j.at("format_version").get<int>();
        if (version != TranslitModel::kFormatVersion) {
            throw ModelFormatError(Kind::VersionMismatch,
                                   "model format_version " + std::to_string(version) + " is not supported (expected " +
                                       std::to_string(TranslitModel::kFormatVersion) + ")");
        }
        const WindowSpec window =
            WindowSpec::checked(j.at("window").at("x").get<int>(), j.at("window").at("y").get<int>());
        std::vector<DecisionTree::Node> nodes;
        node_from_json(j.at("root"), nodes, window.width());

        TranslitModel model{DecisionTree(std::move(nodes)), window,
                            Direction::parse(j.at("direction").get<std::string>()),
                            j.at("table_fingerprint").get<std::string>(), {}, version};
        for (const auto& c : j.at("source_alphabet")) {
            model.source_alphabet.push_back(symbol_from_json(c.get<std::string>()).value());
        }
        if (!std::is_sorted(model.source_alphabet.begin(), model.source_alphabet.end())) {
            throw ModelFormatError(Kind::Corrupt, "source_alphabet is not sorted");
        }
        return model;
    } catch (const ModelFormatError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ModelFormatError(Kind::Corrupt, std::string("malformed model: ") + e.what());
    } catch (const Error& e) {
        throw ModelFormatError(Kind::Corrupt, std::string("malformed model: ") + e.what());
    }
}

TranslitModel load_model(const std::filesystem::path& path) { return deserialize(io::read_file(path)); }

void save_model(const TranslitModel& model, const std::filesystem::path& path) {
    io::write_file_atomic(path, serialize(model));
}

}  // namespace translit
