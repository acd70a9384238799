#include "roceval/monitor.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace roceval {

std::string_view split_name(Split split) {
    switch (split) {
        case Split::train:
            return "train";
        case Split::validation:
            return "validation";
        case Split::test:
            return "test";
    }
    return "?";
}

std::string_view criterion_name(StopCriterion criterion) {
    switch (criterion) {
        case StopCriterion::max_val_cauc:
            return "max_val_cauc";
        case StopCriterion::max_val_auc:
            return "max_val_auc";
        case StopCriterion::min_val_bce:
            return "min_val_bce";
    }
    return "?";
}

const EpochMetrics* MetricTrajectory::find(int epoch, Split split) const {
    for (const TrajectoryEntry& entry : entries) {
        if (entry.epoch == epoch && entry.split == split) {
            return &entry.metrics;
        }
    }
    return nullptr;
}

MetricTrajectory compute_trajectory(std::span<const EpochRecord> log,
                                    std::optional<BceWeights> weights) {
    MetricTrajectory trajectory;
    trajectory.entries.reserve(log.size());
    std::set<std::pair<int, int>> seen;
    for (const EpochRecord& record : log) {
        if (!seen.insert({record.epoch, static_cast<int>(record.split)}).second) {
            throw DuplicateEpochSplit(record.epoch, std::string(split_name(record.split)));
        }
        EpochMetrics metrics;
        metrics.bce = bce(record.dataset, weights).value;
        const ClassPartition split = partition(record.dataset);
        if (!split.actual_positives.empty() && !split.actual_negatives.empty()) {
            const CaucResult result = cauc(record.dataset);
            metrics.auc = result.auc;
            metrics.cauc = result.cauc;
        }
        trajectory.entries.push_back(TrajectoryEntry{record.epoch, record.split, metrics});
    }
    std::sort(trajectory.entries.begin(), trajectory.entries.end(),
              [](const TrajectoryEntry& a, const TrajectoryEntry& b) {
                  if (a.epoch != b.epoch) {
                      return a.epoch < b.epoch;
                  }
                  return static_cast<int>(a.split) < static_cast<int>(b.split);
              });
    return trajectory;
}

StopRecommendation recommend_stop(const MetricTrajectory& trajectory, StopCriterion criterion) {
    const bool minimize = criterion == StopCriterion::min_val_bce;
    StopRecommendation chosen{criterion, 0, 0.0};
    bool found = false;
    // Entries are sorted by epoch, so a strict comparison keeps the earliest
    // epoch on ties.
    for (const TrajectoryEntry& entry : trajectory.entries) {
        if (entry.split != Split::validation) {
            continue;
        }
        std::optional<double> value;
        switch (criterion) {
            case StopCriterion::max_val_cauc:
                value = entry.metrics.cauc;
                break;
            case StopCriterion::max_val_auc:
                value = entry.metrics.auc;
                break;
            case StopCriterion::min_val_bce:
                value = entry.metrics.bce;
                break;
        }
        if (!value) {
            continue;
        }
        const bool better = !found || (minimize ? *value < chosen.value : *value > chosen.value);
        if (better) {
            chosen = StopRecommendation{criterion, entry.epoch, *value};
            found = true;
        }
    }
    if (!found) {
        throw NoDefinedMetric();
    }
    return chosen;
}

CriteriaComparison compare_criteria(const MetricTrajectory& trajectory) {
    const auto evaluate = [&trajectory](StopCriterion criterion) {
        CriterionOutcome outcome;
        try {
            outcome.recommendation = recommend_stop(trajectory, criterion);
        } catch (const NoDefinedMetric&) {
            return outcome;
        }
        if (const EpochMetrics* metrics =
                trajectory.find(outcome.recommendation->epoch, Split::test)) {
            outcome.test_metrics = *metrics;
        }
        return outcome;
    };
    return CriteriaComparison{
        evaluate(StopCriterion::max_val_cauc),
        evaluate(StopCriterion::max_val_auc),
        evaluate(StopCriterion::min_val_bce),
    };
}

}  // namespace roceval
