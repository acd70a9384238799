#pragma once

#include <cstdint>
#include <optional>

#include "roceval/dataset.hpp"

namespace roceval {

/// Confusion-derived metrics of one threshold. Any metric whose denominator
/// is zero is nullopt; that is information (a class or prediction side is
/// absent at this threshold), not a failure. F1 is additionally undefined
/// when precision and TPR are both zero.
struct DerivedMetrics {
    std::optional<double> tpr;
    std::optional<double> fpr;
    std::optional<double> specificity;
    std::optional<double> accuracy;
    std::optional<double> precision;
    std::optional<double> f1;
};

DerivedMetrics row_metrics(const ConfusionCounts& counts);

struct ThresholdMetricsRow {
    double threshold;
    std::int64_t tp;
    std::int64_t tn;
    std::int64_t fp;
    std::int64_t fn;
    DerivedMetrics metrics;
};

/// One row per effective threshold, in strictly descending threshold order.
/// Unlike roc_curve, single-class datasets are accepted: their undefined
/// rates simply stay empty.
struct MetricsTable {
    std::vector<ThresholdMetricsRow> rows;
};

MetricsTable build_table(const LabeledDataset& dataset);

/// Among rows whose TPR is defined and at least min_tpr, returns the one
/// with the lowest FPR; rows with undefined FPR rank after any defined one,
/// and ties are broken towards the higher threshold (the more conservative
/// classifier). With fpr_margin > 0, rows whose FPR lies within the margin
/// of the candidate minimum are excluded first, for operating points that
/// should keep a safety distance from the optimum under noisy data.
///
/// Throws NoFeasibleRow when no row qualifies.
const ThresholdMetricsRow& best_row_at_tpr_floor(const MetricsTable& table, double min_tpr,
                                                 double fpr_margin = 0.0);

// The result references into the table, so a temporary argument would
// dangle.
const ThresholdMetricsRow& best_row_at_tpr_floor(MetricsTable&& table, double min_tpr,
                                                 double fpr_margin = 0.0) = delete;

}  // namespace roceval
