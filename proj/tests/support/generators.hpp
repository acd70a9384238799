#pragma once

// Shared fixtures and random-dataset generators for the unit and acceptance
// suites.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "roceval/confidence.hpp"
#include "roceval/dataset.hpp"
#include "roceval/monitor.hpp"

namespace testutil {

inline roceval::LabeledDataset make_dataset(const std::vector<int>& labels,
                                            const std::vector<double>& probs) {
    std::vector<std::pair<int, double>> raw;
    raw.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        raw.emplace_back(labels[i], probs[i]);
    }
    return roceval::validate_dataset(raw);
}

// The 10-row random-prediction fixture: 6 positives, 4 negatives,
// AUC = 2/3 and cAUC ~ 0.1027.
inline roceval::LabeledDataset random_reference() {
    return make_dataset({1, 0, 1, 1, 0, 0, 0, 1, 1, 1},
                        {0.803258838, 0.517853202, 0.639592674, 0.303745995, 0.699606458,
                         0.318090495, 0.277593543, 0.421482502, 0.556011119, 0.548716153});
}

// The 10-row fixture with probabilities on a 0.1 grid: AUC = 21/25 = 0.84.
inline roceval::LabeledDataset grid_reference() {
    return make_dataset({0, 0, 0, 0, 1, 1, 1, 1, 0, 1},
                        {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
}

// Higher AUC (0.75) but TPR = 1 is only reachable at FPR = 0.75.
inline roceval::LabeledDataset high_auc_model() {
    return make_dataset({1, 1, 1, 0, 0, 0, 0}, {0.9, 0.8, 0.05, 0.5, 0.4, 0.3, 0.01});
}

// Lower AUC (7/12) but TPR = 1 is reachable at FPR = 0.5.
inline roceval::LabeledDataset low_auc_model() {
    return make_dataset({1, 1, 1, 0, 0, 0, 0}, {0.55, 0.5, 0.45, 0.6, 0.52, 0.4, 0.35});
}

inline double grid_probability(std::mt19937_64& rng) {
    // 1e-6 grid strictly inside (0, 1): well-separated values survive affine
    // shrinking without collapsing ranks.
    const std::uint64_t k = 1 + rng() % 999999;
    return static_cast<double>(k) * 1e-6;
}

// A dataset with 2..max_n samples, grid probabilities and both classes
// present; optionally re-uses earlier probabilities to inject exact ties.
inline roceval::LabeledDataset random_grid_dataset(std::mt19937_64& rng, int max_n = 50,
                                                   bool inject_ties = true) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    std::vector<int> labels(n);
    std::vector<double> probs(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = static_cast<int>(rng() & 1);
        probs[i] = grid_probability(rng);
    }
    labels[0] = 0;
    labels[1] = 1;
    if (inject_ties && n >= 3) {
        const int copies = static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2 + 1));
        for (int c = 0; c < copies; ++c) {
            const int from = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            const int to = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            probs[to] = probs[from];
        }
    }
    return make_dataset(labels, probs);
}

// A dataset whose probabilities are pairwise distinct.
inline roceval::LabeledDataset random_distinct_dataset(std::mt19937_64& rng, int max_n = 50) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    std::set<std::uint64_t> used;
    std::vector<int> labels(n);
    std::vector<double> probs(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t k = 1 + rng() % 999999;
        while (!used.insert(k).second) {
            k = 1 + rng() % 999999;
        }
        labels[i] = static_cast<int>(rng() & 1);
        probs[i] = static_cast<double>(k) * 1e-6;
    }
    labels[0] = 0;
    labels[1] = 1;
    return make_dataset(labels, probs);
}

// A dataset with a strictly positive net cross-class span (alpha + beta > 0),
// the regime in which shrinking every probability towards 0.5 provably
// lowers the confidence factor. Datasets with alpha + beta < 0 behave the
// opposite way, so unconditioned draws would not satisfy the property.
inline roceval::LabeledDataset random_positive_margin_dataset(std::mt19937_64& rng,
                                                              int max_n = 50) {
    while (true) {
        roceval::LabeledDataset dataset = random_grid_dataset(rng, max_n, false);
        const auto coeff = roceval::coefficients(roceval::partition(dataset));
        if (coeff.alpha + coeff.beta > 1e-3) {
            return dataset;
        }
    }
}

// 3-epoch validation log whose AUC is exactly 1 at every epoch while every
// probability contracts towards 0.5, halving the margins each epoch.
inline std::vector<roceval::EpochRecord> shrinking_margin_log() {
    using roceval::Split;
    std::vector<roceval::EpochRecord> log;
    log.push_back({0, Split::validation, make_dataset({1, 1, 0, 0}, {0.9, 0.8, 0.2, 0.1})});
    log.push_back({1, Split::validation, make_dataset({1, 1, 0, 0}, {0.7, 0.65, 0.35, 0.3})});
    log.push_back({2, Split::validation, make_dataset({1, 1, 0, 0}, {0.6, 0.575, 0.425, 0.4})});
    return log;
}

// 10-epoch log shaped so the three stop criteria disagree: validation cAUC
// peaks at epoch 4 (wide margins, one inverted pair), while both AUC and BCE
// are best at epoch 7 (highest ranking quality and most confident bulk, but
// one low-margin inverted pair caps the coefficients).
inline std::vector<roceval::EpochRecord> divergent_criteria_log(bool with_test_split = true) {
    using roceval::Split;
    std::vector<roceval::EpochRecord> log;
    // Decimal literals so the CSV twin of this fixture parses to bit-equal
    // datasets.
    const std::vector<double> jitter = {0.60,  0.601, 0.602, 0.603, 0.604,
                                        0.605, 0.606, 0.607, 0.608, 0.609};
    for (int epoch = 0; epoch < 10; ++epoch) {
        std::vector<int> labels;
        std::vector<double> probs;
        if (epoch == 4) {
            labels = {1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0};
            probs = {0.99, 0.99, 0.99, 0.99, 0.99, 0.48, 0.01, 0.01, 0.01, 0.01, 0.01, 0.52};
        } else if (epoch == 7) {
            labels = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
            probs = {0.9999, 0.9999, 0.9999, 0.9999, 0.9999, 0.9999, 0.9999, 0.9999, 0.9999,
                     0.45,   0.0001, 0.0001, 0.0001, 0.0001, 0.0001, 0.0001, 0.0001, 0.0001,
                     0.0001, 0.55};
        } else {
            labels = {1, 1, 1, 0, 0, 0};
            probs = {jitter[static_cast<std::size_t>(epoch)], 0.55, 0.45, 0.40, 0.50, 0.58};
        }
        log.push_back({epoch, Split::validation, make_dataset(labels, probs)});
        log.push_back(
            {epoch, Split::train, make_dataset({1, 1, 1, 0, 0, 0}, {0.62, 0.57, 0.44, 0.41, 0.49, 0.56})});
        if (with_test_split) {
            log.push_back({epoch, Split::test, make_dataset({1, 1, 0, 0}, {0.71, 0.64, 0.33, 0.46})});
        }
    }
    return log;
}

}  // namespace testutil
