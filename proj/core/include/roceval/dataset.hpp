#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "roceval/errors.hpp"

namespace roceval {

/// One ground-truth binary label (0 = actual negative, 1 = actual positive)
/// paired with the model's predicted probability in [0, 1].
struct Sample {
    int label;
    double probability;
};

/// A validated, immutable sequence of samples in their original order.
/// Instances can only be created through validate_dataset(), so every
/// LabeledDataset satisfies the label and probability-range invariants.
class LabeledDataset {
public:
    const std::vector<Sample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

private:
    friend LabeledDataset validate_dataset(std::span<const std::pair<int, double>> raw);

    explicit LabeledDataset(std::vector<Sample> samples) : samples_(std::move(samples)) {}

    std::vector<Sample> samples_;
};

/// Checks every (label, probability) pair and returns the dataset with input
/// order preserved. Probabilities of exactly 0 and 1 are accepted unchanged;
/// no clamping is applied, since clamping would silently alter the margin
/// coefficients downstream. Duplicate probabilities are preserved.
///
/// Throws EmptyInput, InvalidLabel or ProbabilityOutOfRange (the latter two
/// carry the index of the offending pair).
LabeledDataset validate_dataset(std::span<const std::pair<int, double>> raw);

/// Predicted probabilities split by ground truth. Either side may be empty;
/// operations that need both classes raise SingleClassInput themselves.
struct ClassPartition {
    std::vector<double> actual_positives;
    std::vector<double> actual_negatives;
};

ClassPartition partition(const LabeledDataset& dataset);

/// Outcome counts of thresholded predictions against ground truth.
struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + tn + fp + fn; }
};

}  // namespace roceval
