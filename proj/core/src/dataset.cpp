#include "roceval/dataset.hpp"

namespace roceval {

LabeledDataset validate_dataset(std::span<const std::pair<int, double>> raw) {
    if (raw.empty()) {
        throw EmptyInput();
    }
    std::vector<Sample> samples;
    samples.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& [label, probability] = raw[i];
        if (label != 0 && label != 1) {
            throw InvalidLabel(i, label);
        }
        // Negated comparison so NaN is rejected as out of range.
        if (!(probability >= 0.0 && probability <= 1.0)) {
            throw ProbabilityOutOfRange(i, probability);
        }
        samples.push_back(Sample{label, probability});
    }
    return LabeledDataset(std::move(samples));
}

ClassPartition partition(const LabeledDataset& dataset) {
    ClassPartition result;
    for (const Sample& sample : dataset.samples()) {
        if (sample.label == 1) {
            result.actual_positives.push_back(sample.probability);
        } else {
            result.actual_negatives.push_back(sample.probability);
        }
    }
    return result;
}

}  // namespace roceval
