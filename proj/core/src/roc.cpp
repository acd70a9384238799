#include "roceval/roc.hpp"

#include <algorithm>

namespace roceval {

namespace {

std::pair<std::int64_t, std::int64_t> class_sizes(const LabeledDataset& dataset) {
    std::int64_t positives = 0;
    for (const Sample& sample : dataset.samples()) {
        positives += sample.label;
    }
    return {positives, static_cast<std::int64_t>(dataset.size()) - positives};
}

}  // namespace

std::vector<double> effective_thresholds(const LabeledDataset& dataset) {
    std::vector<double> thresholds;
    thresholds.reserve(dataset.size() + 2);
    thresholds.push_back(0.0);
    thresholds.push_back(1.0);
    for (const Sample& sample : dataset.samples()) {
        thresholds.push_back(sample.probability);
    }
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    return thresholds;
}

int predict_at_threshold(double probability, double t) {
    return probability <= t ? 0 : 1;
}

ConfusionCounts confusion_at_threshold(const LabeledDataset& dataset, double t) {
    ConfusionCounts counts;
    for (const Sample& sample : dataset.samples()) {
        const int predicted = predict_at_threshold(sample.probability, t);
        if (sample.label == 1) {
            (predicted == 1 ? counts.tp : counts.fn)++;
        } else {
            (predicted == 1 ? counts.fp : counts.tn)++;
        }
    }
    return counts;
}

Rates rates(const ConfusionCounts& counts) {
    Rates result;
    if (counts.tp + counts.fn > 0) {
        result.tpr = static_cast<double>(counts.tp) / static_cast<double>(counts.tp + counts.fn);
    }
    if (counts.fp + counts.tn > 0) {
        result.fpr = static_cast<double>(counts.fp) / static_cast<double>(counts.fp + counts.tn);
    }
    return result;
}

RocCurve curve_at_thresholds(const LabeledDataset& dataset, std::span<const double> thresholds) {
    const auto [positives, negatives] = class_sizes(dataset);
    if (positives == 0 || negatives == 0) {
        throw SingleClassInput();
    }

    std::vector<double> sweep(thresholds.begin(), thresholds.end());
    sweep.push_back(0.0);
    sweep.push_back(1.0);
    std::sort(sweep.begin(), sweep.end(), std::greater<>());
    sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());

    // Samples sorted by descending probability; walking the thresholds
    // downward flips each sample to a positive prediction exactly once.
    std::vector<Sample> ordered(dataset.samples());
    std::sort(ordered.begin(), ordered.end(),
              [](const Sample& a, const Sample& b) { return a.probability > b.probability; });

    RocCurve curve;
    curve.points.reserve(sweep.size() + 1);
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::size_t next = 0;
    for (double t : sweep) {
        while (next < ordered.size() && ordered[next].probability > t) {
            (ordered[next].label == 1 ? tp : fp)++;
            ++next;
        }
        const double fpr = static_cast<double>(fp) / static_cast<double>(negatives);
        const double tpr = static_cast<double>(tp) / static_cast<double>(positives);
        if (!curve.points.empty() && curve.points.back().fpr == fpr &&
            curve.points.back().tpr == tpr) {
            continue;
        }
        curve.points.push_back(RocPoint{t, fpr, tpr});
    }

    // Probabilities equal to exactly 0 never satisfy p > t, so the sweep can
    // stop short of the all-positive configuration; anchor the endpoint.
    if (curve.points.back().fpr != 1.0 || curve.points.back().tpr != 1.0) {
        curve.points.push_back(RocPoint{0.0, 1.0, 1.0});
    }
    return curve;
}

RocCurve roc_curve(const LabeledDataset& dataset) {
    return curve_at_thresholds(dataset, effective_thresholds(dataset));
}

double auc_trapezoid(const RocCurve& curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const RocPoint& a = curve.points[i - 1];
        const RocPoint& b = curve.points[i];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
    }
    return area;
}

double auc_pairwise_oracle(const LabeledDataset& dataset) {
    const ClassPartition split = partition(dataset);
    if (split.actual_positives.empty() || split.actual_negatives.empty()) {
        throw SingleClassInput();
    }
    double correct = 0.0;
    for (double positive : split.actual_positives) {
        for (double negative : split.actual_negatives) {
            if (positive > negative) {
                correct += 1.0;
            } else if (positive == negative) {
                correct += 0.5;
            }
        }
    }
    return correct / (static_cast<double>(split.actual_positives.size()) *
                      static_cast<double>(split.actual_negatives.size()));
}

SeparationClass separation_class(const ClassPartition& partition) {
    if (partition.actual_positives.empty() || partition.actual_negatives.empty()) {
        throw SingleClassInput();
    }
    const auto [min_ap, max_ap] =
        std::minmax_element(partition.actual_positives.begin(), partition.actual_positives.end());
    const auto [min_an, max_an] =
        std::minmax_element(partition.actual_negatives.begin(), partition.actual_negatives.end());
    if (*min_ap > *max_an) {
        return SeparationClass::PerfectPositive;
    }
    if (*max_ap < *min_an) {
        return SeparationClass::PerfectNegative;
    }
    return SeparationClass::Mixed;
}

}  // namespace roceval
