#include "roceval/scenario.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

#include "roceval/confidence.hpp"
#include "roceval/roc.hpp"

namespace roceval {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// 53-bit mantissa draw in [0, 1); avoids the implementation-defined
// std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_range(double value, std::vector<std::pair<int, double>>& out, int label) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ProbabilityOverflow(value);
    }
    out.emplace_back(label, value);
}

}  // namespace

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial_index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial_index)));
}

LabeledDataset random_trial(int n, std::mt19937_64& rng) {
    if (n < 2) {
        throw std::invalid_argument("random_trial requires n >= 2");
    }
    std::vector<std::pair<int, double>> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double probability = uniform01(rng);
        const int label = uniform01(rng) < 0.5 ? 0 : 1;
        raw.emplace_back(label, probability);
    }
    return validate_dataset(raw);
}

MonteCarloSummary monte_carlo(const RandomTrialConfig& config, unsigned threads) {
    if (config.n < 2 || config.trials < 1) {
        throw std::invalid_argument("monte_carlo requires n >= 2 and trials >= 1");
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }

    struct TrialResult {
        double auc = 0.0;
        double cauc = 0.0;
        bool completed = false;
    };
    std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));

    const auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::mt19937_64 rng = trial_engine(config.seed, i);
            const LabeledDataset dataset = random_trial(config.n, rng);
            const ClassPartition split = partition(dataset);
            if (split.actual_positives.empty() || split.actual_negatives.empty()) {
                continue;
            }
            const CaucResult r = cauc(dataset);
            results[i] = TrialResult{r.auc, r.cauc, true};
        }
    };

    const std::size_t total = results.size();
    if (threads <= 1 || total < 2) {
        run_range(0, total);
    } else {
        const std::size_t worker_count = std::min<std::size_t>(threads, total);
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        const std::size_t chunk = (total + worker_count - 1) / worker_count;
        for (std::size_t w = 0; w < worker_count; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(total, begin + chunk);
            workers.emplace_back(run_range, begin, end);
        }
        for (std::thread& worker : workers) {
            worker.join();
        }
    }

    // Reduce in trial order so the means do not depend on scheduling.
    double auc_sum = 0.0;
    double cauc_sum = 0.0;
    std::int64_t completed = 0;
    for (const TrialResult& result : results) {
        if (result.completed) {
            auc_sum += result.auc;
            cauc_sum += result.cauc;
            ++completed;
        }
    }
    if (completed == 0) {
        throw AllTrialsSkipped();
    }
    return MonteCarloSummary{auc_sum / static_cast<double>(completed),
                             cauc_sum / static_cast<double>(completed), completed,
                             config.trials - completed};
}

LabeledDataset scenario(const ScenarioSpec& spec) {
    if (!(spec.epsilon > 0.0) || !(spec.epsilon <= spec.p)) {
        throw std::invalid_argument("scenario requires 0 < epsilon <= p");
    }
    if (!(spec.delta >= 0.0)) {
        throw std::invalid_argument("scenario requires delta >= 0");
    }
    if (spec.ap_count < 1 || spec.an_count < 1) {
        throw std::invalid_argument("scenario requires positive class counts");
    }

    std::vector<std::pair<int, double>> raw;
    raw.reserve(static_cast<std::size_t>(spec.ap_count + spec.an_count));
    switch (spec.family) {
        case ScenarioFamily::PerfectAuc1:
            for (int k = spec.an_count - 1; k >= 0; --k) {
                check_range(spec.p - spec.epsilon - k * spec.delta, raw, 0);
            }
            for (int k = 0; k < spec.ap_count; ++k) {
                check_range(spec.p + k * spec.delta, raw, 1);
            }
            break;
        case ScenarioFamily::PerfectAuc0:
            for (int k = spec.an_count - 1; k >= 0; --k) {
                check_range(spec.p - k * spec.delta, raw, 0);
            }
            for (int k = 0; k < spec.ap_count; ++k) {
                check_range(spec.p - spec.epsilon + k * spec.delta, raw, 1);
            }
            break;
        case ScenarioFamily::SingleFlipMixed:
            for (int k = spec.an_count - 2; k >= 0; --k) {
                check_range(spec.p - spec.epsilon - k * spec.delta, raw, 0);
            }
            check_range(spec.p, raw, 0);
            for (int k = 0; k < spec.ap_count; ++k) {
                check_range(spec.p + k * spec.delta, raw, 1);
            }
            break;
    }
    return validate_dataset(raw);
}

}  // namespace roceval
