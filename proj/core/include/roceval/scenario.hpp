#pragma once

#include <cstdint>
#include <random>

#include "roceval/dataset.hpp"

namespace roceval {

struct RandomTrialConfig {
    int n = 100;
    int trials = 10000;
    std::uint64_t seed = 0;
};

struct MonteCarloSummary {
    double mean_auc;
    double mean_cauc;
    std::int64_t trials_completed;
    std::int64_t trials_skipped;
};

/// Parametric dataset families built around a base probability p, a class
/// gap epsilon and an in-class spacing delta.
///
///   PerfectAuc1     negatives at p-eps-k*delta, positives at p+k*delta;
///                   every positive outranks every negative, AUC = 1.
///   PerfectAuc0     negatives at p-k*delta, positives at p-eps+k*delta;
///                   AUC = 0 as long as eps > (ap_count+an_count-2)*delta
///                   keeps the two blocks separated.
///   SingleFlipMixed the PerfectAuc1 layout with the top negative raised to
///                   p, tying the lowest positive; the curve loses the (0,1)
///                   corner and AUC drops by a single triangle's area.
enum class ScenarioFamily { PerfectAuc1, PerfectAuc0, SingleFlipMixed };

struct ScenarioSpec {
    double p;
    double epsilon;  // 0 < epsilon <= p
    double delta;    // >= 0
    int ap_count;
    int an_count;
    ScenarioFamily family;
};

/// Deterministic engine for one trial. The mapping depends only on the pair
/// (seed, trial_index), so trials can be scheduled in any order or across
/// any number of threads without changing results.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial_index);

/// n samples with probability drawn uniformly from [0, 1) and label from an
/// independent fair coin (a 0.5 threshold on a second uniform draw). Both
/// draws avoid std::uniform_real_distribution so the byte-for-byte output is
/// identical across standard library implementations.
LabeledDataset random_trial(int n, std::mt19937_64& rng);

/// Runs config.trials independent trials of random_trial(config.n) and
/// averages AUC and cAUC over those with both classes present; single-class
/// draws are counted as skipped rather than resampled, which would bias the
/// label distribution. The summary is identical for any thread count.
///
/// Throws AllTrialsSkipped when no trial completes.
MonteCarloSummary monte_carlo(const RandomTrialConfig& config, unsigned threads = 1);

/// Materializes one scenario family instance: negatives first in ascending
/// probability order, then positives ascending.
///
/// Throws ProbabilityOverflow when a generated value leaves [0, 1] and
/// std::invalid_argument when the spec's own invariants are violated.
LabeledDataset scenario(const ScenarioSpec& spec);

}  // namespace roceval
