#include "roceval/metric_table.hpp"

#include <limits>

#include "roceval/roc.hpp"

namespace roceval {

namespace {

std::optional<double> ratio(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0) {
        return std::nullopt;
    }
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace

DerivedMetrics row_metrics(const ConfusionCounts& counts) {
    DerivedMetrics metrics;
    metrics.tpr = ratio(counts.tp, counts.tp + counts.fn);
    metrics.fpr = ratio(counts.fp, counts.fp + counts.tn);
    metrics.specificity = ratio(counts.tn, counts.tn + counts.fp);
    metrics.accuracy = ratio(counts.tp + counts.tn, counts.total());
    metrics.precision = ratio(counts.tp, counts.tp + counts.fp);
    if (metrics.precision && metrics.tpr && (*metrics.precision > 0.0 || *metrics.tpr > 0.0)) {
        metrics.f1 = 2.0 * *metrics.precision * *metrics.tpr / (*metrics.precision + *metrics.tpr);
    }
    return metrics;
}

MetricsTable build_table(const LabeledDataset& dataset) {
    MetricsTable table;
    const std::vector<double> thresholds = effective_thresholds(dataset);
    table.rows.reserve(thresholds.size());
    for (double t : thresholds) {
        const ConfusionCounts counts = confusion_at_threshold(dataset, t);
        table.rows.push_back(
            ThresholdMetricsRow{t, counts.tp, counts.tn, counts.fp, counts.fn, row_metrics(counts)});
    }
    return table;
}

const ThresholdMetricsRow& best_row_at_tpr_floor(const MetricsTable& table, double min_tpr,
                                                 double fpr_margin) {
    const auto qualifies = [min_tpr](const ThresholdMetricsRow& row) {
        return row.metrics.tpr && *row.metrics.tpr >= min_tpr;
    };
    const auto fpr_rank = [](const ThresholdMetricsRow& row) {
        return row.metrics.fpr ? *row.metrics.fpr : std::numeric_limits<double>::infinity();
    };

    double floor = -std::numeric_limits<double>::infinity();
    if (fpr_margin > 0.0) {
        double lowest = std::numeric_limits<double>::infinity();
        bool any = false;
        for (const ThresholdMetricsRow& row : table.rows) {
            if (qualifies(row)) {
                lowest = std::min(lowest, fpr_rank(row));
                any = true;
            }
        }
        if (!any) {
            throw NoFeasibleRow();
        }
        floor = lowest + fpr_margin;
    }

    const ThresholdMetricsRow* best = nullptr;
    for (const ThresholdMetricsRow& row : table.rows) {
        if (!qualifies(row) || fpr_rank(row) < floor) {
            continue;
        }
        // Rows are in descending threshold order, so keeping the first row at
        // any given FPR implements the higher-threshold tie-break.
        if (best == nullptr || fpr_rank(row) < fpr_rank(*best)) {
            best = &row;
        }
    }
    if (best == nullptr) {
        throw NoFeasibleRow();
    }
    return *best;
}

}  // namespace roceval
