#include "translit/dtree.hpp"

#include "translit/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace translit {

double gini(const ClassCounts& class_counts) {
    std::size_t total = 0;
    for (const auto& [label, n] : class_counts) {
        total += n;
    }
    if (total == 0) {
        throw InvalidArgument("gini of empty class counts");
    }
    double sum_sq = 0.0;
    for (const auto& [label, n] : class_counts) {
        const double p = static_cast<double>(n) / static_cast<double>(total);
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

const std::string& majority_label(const ClassCounts& class_counts) {
    if (class_counts.empty()) {
        throw InvalidArgument("majority of empty class counts");
    }
    auto best = class_counts.begin();
    for (auto it = class_counts.begin(); it != class_counts.end(); ++it) {
        if (it->second > best->second) {
            best = it;
        }
    }
    return best->first;
}

namespace {

__extension__ typedef __int128 Int128;

/// Samples re-encoded as dense ids. Label ids follow lexicographic label
/// order and symbol ids follow symbol order, so id order is tie-break order.
struct Encoded {
    std::size_t width = 0;
    std::vector<std::string> labels;
    std::vector<Symbol> symbols;
    std::vector<std::uint32_t> x;  // row-major, n * width
    std::vector<std::uint32_t> y;

    std::uint32_t at(std::uint32_t row, std::size_t f) const { return x[row * width + f]; }
};

Encoded encode(std::span<const Sample> samples) {
    if (samples.empty()) {
        throw TrainingError(TrainingError::Kind::EmptyTrainingSet, "no training samples");
    }
    Encoded enc;
    enc.width = samples.front().features.size();
    for (const auto& s : samples) {
        if (s.features.size() != enc.width) {
            throw TrainingError(TrainingError::Kind::InconsistentFeatureWidth,
                                "feature vectors of width " + std::to_string(enc.width) + " and " +
                                    std::to_string(s.features.size()) + " in one training set");
        }
        enc.labels.push_back(s.label);
        enc.symbols.insert(enc.symbols.end(), s.features.begin(), s.features.end());
    }
    std::sort(enc.labels.begin(), enc.labels.end());
    enc.labels.erase(std::unique(enc.labels.begin(), enc.labels.end()), enc.labels.end());
    std::sort(enc.symbols.begin(), enc.symbols.end());
    enc.symbols.erase(std::unique(enc.symbols.begin(), enc.symbols.end()), enc.symbols.end());

    enc.x.reserve(samples.size() * enc.width);
    enc.y.reserve(samples.size());
    for (const auto& s : samples) {
        for (const Symbol sym : s.features) {
            enc.x.push_back(static_cast<std::uint32_t>(
                std::lower_bound(enc.symbols.begin(), enc.symbols.end(), sym) - enc.symbols.begin()));
        }
        enc.y.push_back(static_cast<std::uint32_t>(
            std::lower_bound(enc.labels.begin(), enc.labels.end(), s.label) - enc.labels.begin()));
    }
    return enc;
}

struct NodeStats {
    std::vector<std::size_t> counts;  // per label id
    std::size_t n = 0;
    std::uint64_t sum_sq = 0;         // sum of counts^2
    std::size_t distinct = 0;
};

NodeStats node_stats(const Encoded& enc, std::span<const std::uint32_t> rows) {
    NodeStats st;
    st.counts.assign(enc.labels.size(), 0);
    for (const auto r : rows) {
        ++st.counts[enc.y[r]];
    }
    st.n = rows.size();
    for (const auto c : st.counts) {
        st.sum_sq += static_cast<std::uint64_t>(c) * c;
        st.distinct += c != 0;
    }
    return st;
}

struct BestSplit {
    std::size_t feature = 0;
    std::uint32_t symbol = 0;
    // Weighted child purity  sum_L c^2 / n_L + sum_R c^2 / n_R  as num / den.
    // Maximizing it is the same as maximizing the Gini decrease.
    Int128 num = 0;
    Int128 den = 1;
};

std::optional<BestSplit> find_split(const Encoded& enc, std::span<const std::uint32_t> rows, const NodeStats& st) {
    std::optional<BestSplit> best;
    std::vector<std::uint64_t> keys(rows.size());
    for (std::size_t f = 0; f < enc.width; ++f) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            keys[i] = (static_cast<std::uint64_t>(enc.at(rows[i], f)) << 32) | enc.y[rows[i]];
        }
        std::sort(keys.begin(), keys.end());
        std::size_t i = 0;
        while (i < keys.size()) {
            const auto sym = static_cast<std::uint32_t>(keys[i] >> 32);
            std::uint64_t n_left = 0, left_sq = 0, cross = 0;
            while (i < keys.size() && (keys[i] >> 32) == sym) {
                const auto label = static_cast<std::uint32_t>(keys[i] & 0xFFFFFFFFu);
                std::uint64_t c = 0;
                while (i < keys.size() && keys[i] == ((static_cast<std::uint64_t>(sym) << 32) | label)) {
                    ++c;
                    ++i;
                }
                n_left += c;
                left_sq += c * c;
                cross += c * st.counts[label];
            }
            const std::uint64_t n_right = st.n - n_left;
            if (n_right == 0) {
                continue;
            }
            // sum over labels of (parent - left)^2
            const std::uint64_t right_sq = st.sum_sq - 2 * cross + left_sq;
            const Int128 num = static_cast<Int128>(left_sq) * n_right + static_cast<Int128>(right_sq) * n_left;
            const Int128 den = static_cast<Int128>(n_left) * n_right;
            if (!best || num * best->den > best->num * den) {
                best = BestSplit{f, sym, num, den};
            }
        }
    }
    return best;
}

double decrease_of(const BestSplit& s, const NodeStats& st) {
    const double n = static_cast<double>(st.n);
    const double child = static_cast<double>(s.num) / static_cast<double>(s.den);
    return (child - static_cast<double>(st.sum_sq) / n) / n;
}

}  // namespace

std::optional<SplitChoice> best_split(std::span<const Sample> samples) {
    const Encoded enc = encode(samples);
    std::vector<std::uint32_t> rows(samples.size());
    std::iota(rows.begin(), rows.end(), 0u);
    const NodeStats st = node_stats(enc, rows);
    const auto split = find_split(enc, rows, st);
    if (!split) {
        return std::nullopt;
    }
    return SplitChoice{split->feature, enc.symbols[split->symbol], decrease_of(*split, st)};
}

DecisionTree DecisionTree::train(std::span<const Sample> samples) {
    const Encoded enc = encode(samples);

    struct Task {
        std::vector<std::uint32_t> rows;
        std::size_t parent;
        bool is_match;
    };
    constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

    std::vector<Node> nodes;
    std::vector<Task> stack;
    {
        std::vector<std::uint32_t> all(samples.size());
        std::iota(all.begin(), all.end(), 0u);
        stack.push_back({std::move(all), kNoParent, false});
    }
    while (!stack.empty()) {
        Task task = std::move(stack.back());
        stack.pop_back();
        const std::size_t index = nodes.size();
        if (task.parent != kNoParent) {
            auto& parent = std::get<Split>(nodes[task.parent]);
            (task.is_match ? parent.match : parent.other) = index;
        }

        const NodeStats st = node_stats(enc, task.rows);
        const auto split = st.distinct > 1 ? find_split(enc, task.rows, st) : std::nullopt;
        if (!split) {
            Leaf leaf;
            for (std::size_t l = 0; l < st.counts.size(); ++l) {
                if (st.counts[l]) {
                    leaf.class_counts.emplace(enc.labels[l], st.counts[l]);
                }
            }
            leaf.prediction = majority_label(leaf.class_counts);
            nodes.emplace_back(std::move(leaf));
            continue;
        }

        nodes.emplace_back(Split{split->feature, enc.symbols[split->symbol], 0, 0});
        std::vector<std::uint32_t> match, other;
        for (const auto r : task.rows) {
            (enc.at(r, split->feature) == split->symbol ? match : other).push_back(r);
        }
        // `match` is popped first, giving preorder numbering.
        stack.push_back({std::move(other), index, false});
        stack.push_back({std::move(match), index, true});
    }
    return DecisionTree(std::move(nodes));
}

DecisionTree::DecisionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) {
        throw InvalidArgument("tree has no nodes");
    }
    std::vector<unsigned> refs(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (const auto* split = std::get_if<Split>(&nodes_[i])) {
            for (const std::size_t child : {split->match, split->other}) {
                if (child <= i || child >= nodes_.size()) {
                    throw InvalidArgument("tree node " + std::to_string(i) + " has an invalid child index");
                }
                ++refs[child];
            }
        } else {
            const auto& leaf = std::get<Leaf>(nodes_[i]);
            if (leaf.class_counts.empty() || majority_label(leaf.class_counts) != leaf.prediction) {
                throw InvalidArgument("tree leaf " + std::to_string(i) + " does not predict its majority label");
            }
        }
    }
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (refs[i] != 1) {
            throw InvalidArgument("tree node " + std::to_string(i) + " is not referenced exactly once");
        }
    }
}

const std::string& DecisionTree::predict(std::span<const Symbol> features) const {
    std::size_t i = 0;
    for (;;) {
        const Node& node = nodes_[i];
        if (const auto* leaf = std::get_if<Leaf>(&node)) {
            return leaf->prediction;
        }
        const auto& split = std::get<Split>(node);
        i = features[split.feature] == split.symbol ? split.match : split.other;
    }
}

std::size_t DecisionTree::leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return std::holds_alternative<Leaf>(n); }));
}

std::size_t DecisionTree::depth() const {
    std::vector<std::size_t> level(nodes_.size(), 0);
    std::size_t deepest = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        deepest = std::max(deepest, level[i]);
        if (const auto* split = std::get_if<Split>(&nodes_[i])) {
            level[split->match] = level[split->other] = level[i] + 1;
        }
    }
    return deepest;
}

}  // namespace translit
