#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "roceval/confidence.hpp"
#include "roceval/dataset.hpp"

namespace roceval {

enum class Split { train, validation, test };

std::string_view split_name(Split split);

/// The predictions one model state produced on one cohort.
struct EpochRecord {
    int epoch;
    Split split;
    LabeledDataset dataset;
};

/// BCE is always defined; AUC and cAUC are nullopt for single-class cohorts,
/// which are data defects rather than performance signals.
struct EpochMetrics {
    double bce;
    std::optional<double> auc;
    std::optional<double> cauc;
};

struct TrajectoryEntry {
    int epoch;
    Split split;
    EpochMetrics metrics;
};

/// Per-(epoch, split) metric values, sorted by epoch and then by split
/// (train, validation, test).
struct MetricTrajectory {
    std::vector<TrajectoryEntry> entries;

    const EpochMetrics* find(int epoch, Split split) const;
};

/// Throws DuplicateEpochSplit when two records share an (epoch, split) key.
MetricTrajectory compute_trajectory(std::span<const EpochRecord> log,
                                    std::optional<BceWeights> weights = std::nullopt);

enum class StopCriterion { max_val_cauc, max_val_auc, min_val_bce };

std::string_view criterion_name(StopCriterion criterion);

struct StopRecommendation {
    StopCriterion criterion;
    int epoch;
    double value;
};

/// The epoch whose validation metric is best under the criterion. Entries
/// with an undefined metric are ignored, and ties go to the earliest epoch:
/// stopping sooner costs nothing when the metric is equal.
///
/// Throws NoDefinedMetric when no validation entry defines the metric.
StopRecommendation recommend_stop(const MetricTrajectory& trajectory, StopCriterion criterion);

/// recommendation is nullopt when the criterion's metric is undefined on
/// every validation entry; test_metrics is filled when the log carries a
/// test split for the recommended epoch.
struct CriterionOutcome {
    std::optional<StopRecommendation> recommendation;
    std::optional<EpochMetrics> test_metrics;
};

struct CriteriaComparison {
    CriterionOutcome max_val_cauc;
    CriterionOutcome max_val_auc;
    CriterionOutcome min_val_bce;
};

/// Runs all three criteria; one criterion lacking a defined metric does not
/// abort the others.
CriteriaComparison compare_criteria(const MetricTrajectory& trajectory);

}  // namespace roceval
