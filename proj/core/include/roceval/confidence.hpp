#pragma once

#include <optional>

#include "roceval/dataset.hpp"

namespace roceval {

/// Cross-class probability margins. alpha = max(AP) - min(AN) is the widest
/// span between the classes; beta = min(AP) - max(AN) is the worst-case
/// margin and goes negative as soon as the classes overlap. Always
/// -1 <= beta <= alpha <= 1.
struct ConfidenceCoefficients {
    double alpha;
    double beta;
};

/// Throws SingleClassInput when either side of the partition is empty.
ConfidenceCoefficients coefficients(const ClassPartition& partition);

/// cauc = e^(alpha-1) * e^(beta-1) * auc. Both factors are at most 1, so
/// 0 <= cauc <= auc <= 1; equality holds only for a fully confident,
/// perfectly separated model (alpha = beta = 1).
struct CaucResult {
    double auc;
    ConfidenceCoefficients coefficients;
    double cauc;
};

/// Confidence-weighted AUC: the trapezoid AUC of the ROC curve scaled by the
/// margin coefficients. Throws SingleClassInput.
CaucResult cauc(const LabeledDataset& dataset);

/// Per-class weights for the weighted binary cross-entropy. Both must be
/// strictly positive.
struct BceWeights {
    double positive = 1.0;
    double negative = 1.0;
};

/// Probabilities are clipped into [kLogClipEpsilon, 1 - kLogClipEpsilon]
/// before the logs so the loss stays finite; a value at or beyond
/// kBceDivergenceFloor is treated as divergent by correspondence_report.
inline constexpr double kLogClipEpsilon = 1e-12;
inline constexpr double kBceDivergenceFloor = 20.0;
inline constexpr double kIdealCaucTolerance = 1e-9;
inline constexpr double kIdealBceTolerance = 1e-9;

struct BceValue {
    double value;
    std::optional<BceWeights> weights;
};

/// Binary cross-entropy, -1/N * sum of y*log(p) + (1-y)*log(1-p), evaluated
/// in sample order. With weights, each class term is multiplied by its
/// weight before the sum. Throws NonPositiveWeight.
BceValue bce(const LabeledDataset& dataset, std::optional<BceWeights> weights = std::nullopt);

/// The ideal case (cauc = 1, bce = 0) and the worst case (cauc = 0,
/// bce divergent) of the two metrics coincide; this record checks a dataset
/// against both extremes.
struct CorrespondenceReport {
    double auc;
    double cauc;
    double bce;
    bool is_ideal;
    bool is_worst;
};

CorrespondenceReport correspondence_report(const LabeledDataset& dataset,
                                           double cauc_tolerance = kIdealCaucTolerance,
                                           double bce_tolerance = kIdealBceTolerance);

}  // namespace roceval
