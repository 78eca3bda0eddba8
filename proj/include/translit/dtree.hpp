#pragma once

// Binary classification tree over categorical features.
//
// Internal nodes test one window position for equality with one symbol;
// samples that match go to the `match` child, the rest to `other`. Growth
// follows the usual CART recipe with the Gini criterion and no stopping rule
// besides purity: every node that is impure and can be separated at all is
// split on the (position, symbol) test with the largest impurity decrease,
// so training data without label conflicts is always fitted exactly.
//
// Ties between equally good tests go to the lowest position, then the lowest
// symbol (padding last). Split quality is compared in exact integer
// arithmetic, so the tie-break is never at the mercy of rounding.

#include "translit/featurizer.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace translit {

using ClassCounts = std::map<std::string, std::size_t>;

/// 1 - sum p_c^2. Throws InvalidArgument when the total count is zero.
double gini(const ClassCounts& class_counts);

/// Majority label, ties to the lexicographically smallest. Counts must be non-empty.
const std::string& majority_label(const ClassCounts& class_counts);

struct SplitChoice {
    std::size_t feature = 0;
    Symbol symbol;
    double impurity_decrease = 0.0;

    bool operator==(const SplitChoice&) const = default;
};

/// The split the trainer would make at a node holding `samples`, or nullopt
/// when no equality test sends samples both ways.
std::optional<SplitChoice> best_split(std::span<const Sample> samples);

class DecisionTree {
public:
    struct Split {
        std::size_t feature = 0;
        Symbol symbol;
        std::size_t match = 0;  ///< node index taken when features[feature] == symbol
        std::size_t other = 0;

        bool operator==(const Split&) const = default;
    };

    struct Leaf {
        ClassCounts class_counts;
        std::string prediction;

        bool operator==(const Leaf&) const = default;
    };

    using Node = std::variant<Split, Leaf>;

    /// Nodes in preorder, root first. Every child index must point past its
    /// parent and every non-root node must be referenced exactly once;
    /// leaves must predict their majority label. Throws InvalidArgument.
    explicit DecisionTree(std::vector<Node> nodes);

    /// Throws TrainingError (EmptyTrainingSet, InconsistentFeatureWidth).
    static DecisionTree train(std::span<const Sample> samples);

    /// Caller guarantees the vector is as wide as the training vectors.
    const std::string& predict(std::span<const Symbol> features) const;

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t leaf_count() const;
    std::size_t depth() const;

    bool operator==(const DecisionTree&) const = default;

private:
    std::vector<Node> nodes_;
};

}  // namespace translit
