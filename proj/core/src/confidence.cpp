#include "roceval/confidence.hpp"

#include <algorithm>
#include <cmath>

#include "roceval/roc.hpp"

namespace roceval {

ConfidenceCoefficients coefficients(const ClassPartition& partition) {
    if (partition.actual_positives.empty() || partition.actual_negatives.empty()) {
        throw SingleClassInput();
    }
    const auto [min_ap, max_ap] =
        std::minmax_element(partition.actual_positives.begin(), partition.actual_positives.end());
    const auto [min_an, max_an] =
        std::minmax_element(partition.actual_negatives.begin(), partition.actual_negatives.end());
    return ConfidenceCoefficients{*max_ap - *min_an, *min_ap - *max_an};
}

CaucResult cauc(const LabeledDataset& dataset) {
    const ConfidenceCoefficients coeff = coefficients(partition(dataset));
    const double auc = auc_trapezoid(roc_curve(dataset));
    const double value = std::exp(coeff.alpha - 1.0) * std::exp(coeff.beta - 1.0) * auc;
    return CaucResult{auc, coeff, value};
}

BceValue bce(const LabeledDataset& dataset, std::optional<BceWeights> weights) {
    double weight_positive = 1.0;
    double weight_negative = 1.0;
    if (weights) {
        if (!(weights->positive > 0.0)) {
            throw NonPositiveWeight(weights->positive);
        }
        if (!(weights->negative > 0.0)) {
            throw NonPositiveWeight(weights->negative);
        }
        weight_positive = weights->positive;
        weight_negative = weights->negative;
    }

    double sum = 0.0;
    for (const Sample& sample : dataset.samples()) {
        const double p =
            std::clamp(sample.probability, kLogClipEpsilon, 1.0 - kLogClipEpsilon);
        if (sample.label == 1) {
            sum += weight_positive * std::log(p);
        } else {
            sum += weight_negative * std::log(1.0 - p);
        }
    }
    return BceValue{-sum / static_cast<double>(dataset.size()), weights};
}

CorrespondenceReport correspondence_report(const LabeledDataset& dataset, double cauc_tolerance,
                                           double bce_tolerance) {
    const CaucResult result = cauc(dataset);
    const double loss = bce(dataset).value;
    return CorrespondenceReport{
        result.auc,
        result.cauc,
        loss,
        result.cauc >= 1.0 - cauc_tolerance && loss <= bce_tolerance,
        result.cauc <= cauc_tolerance && loss >= kBceDivergenceFloor,
    };
}

}  // namespace roceval
