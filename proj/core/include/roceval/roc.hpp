#pragma once

#include <optional>
#include <span>
#include <vector>

#include "roceval/dataset.hpp"

namespace roceval {

/// One operating point of the ROC curve together with the threshold that
/// produced it.
struct RocPoint {
    double threshold;
    double fpr;
    double tpr;
};

/// Ordered from (0,0) to (1,1); both rate sequences are non-decreasing and
/// consecutive duplicate points are collapsed, so a dataset with n distinct
/// probabilities yields exactly n+1 points.
struct RocCurve {
    std::vector<RocPoint> points;
};

/// TPR and FPR of a raw confusion configuration. A rate with a zero
/// denominator is reported as nullopt, never as a quiet NaN.
struct Rates {
    std::optional<double> tpr;
    std::optional<double> fpr;
};

enum class SeparationClass { PerfectPositive, PerfectNegative, Mixed };

/// The set {0} U {distinct predicted probabilities} U {1}, sorted descending.
/// Iterating it in order traces the ROC curve from (0,0) towards (1,1);
/// values between two consecutive members never change any prediction, so no
/// finer sweep can add curve points.
std::vector<double> effective_thresholds(const LabeledDataset& dataset);

/// 0 when probability <= t, 1 otherwise.
int predict_at_threshold(double probability, double t);

/// Applies predict_at_threshold to every sample and tallies the outcomes.
ConfusionCounts confusion_at_threshold(const LabeledDataset& dataset, double t);

Rates rates(const ConfusionCounts& counts);

/// Builds the curve from an arbitrary set of thresholds (normalized to a
/// descending unique sequence; 0 and 1 are always included). Thresholds
/// outside the effective set add no points. A probability of exactly 0 never
/// flips to a positive prediction under the p <= t rule, so the terminal
/// (1,1) point is appended explicitly whenever thresholding alone cannot
/// reach it; this keeps the curve anchored and the trapezoid area equal to
/// the pairwise ranking statistic for every input.
///
/// Throws SingleClassInput when the dataset lacks one class.
RocCurve curve_at_thresholds(const LabeledDataset& dataset, std::span<const double> thresholds);

/// ROC curve over the effective threshold set. Requires both classes.
RocCurve roc_curve(const LabeledDataset& dataset);

/// Trapezoid area under the curve, accumulated in point order:
/// sum of (fpr2 - fpr1) * (tpr1 + tpr2) / 2 over consecutive point pairs.
double auc_trapezoid(const RocCurve& curve);

/// Mann-Whitney form: the fraction of (positive, negative) pairs where the
/// positive probability is higher, ties counting one half. Kept independent
/// of the curve-based route so the two can verify each other.
///
/// Throws SingleClassInput.
double auc_pairwise_oracle(const LabeledDataset& dataset);

/// PerfectPositive when min(AP) > max(AN) (AUC is 1), PerfectNegative when
/// max(AP) < min(AN) (AUC is 0), Mixed otherwise. A tie between the extreme
/// probabilities of the two classes is Mixed: the separating threshold both
/// conditions require does not exist.
///
/// Throws SingleClassInput.
SeparationClass separation_class(const ClassPartition& partition);

}  // namespace roceval
