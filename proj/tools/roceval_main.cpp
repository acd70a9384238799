// Command-line front end: evaluation commands over prediction CSV/JSONL
// files, Monte Carlo simulation of random predictions, and stop-epoch
// analysis of per-epoch prediction logs.
//
// Exit codes: 0 ok, 2 parse/validation error, 3 single-class input,
// 4 no feasible row, 5 all trials skipped, 6 no defined metric.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "roceval/io.hpp"

namespace {

using namespace roceval;

constexpr int kExitParse = 2;
constexpr int kExitSingleClass = 3;
constexpr int kExitNoFeasibleRow = 4;
constexpr int kExitAllTrialsSkipped = 5;
constexpr int kExitNoDefinedMetric = 6;

struct Options {
    std::string format = "csv";
    std::string weights;
    std::string input;
    double tpr_floor = -1.0;
    bool has_tpr_floor = false;
    double fpr_margin = 0.0;
    int n = 100;
    int trials = 10000;
    std::uint64_t seed = 0;
    std::string criterion;
};

io::OutputFormat output_format(const Options& options) {
    return options.format == "structured" ? io::OutputFormat::structured : io::OutputFormat::csv;
}

std::optional<BceWeights> parse_weights(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw NonPositiveWeight(0.0);
    }
    BceWeights weights;
    const auto parse_one = [&text](std::size_t begin, std::size_t end, double& out) {
        const char* first = text.data() + begin;
        const char* last = text.data() + end;
        const auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc() || ptr != last || first == last) {
            throw NonPositiveWeight(0.0);
        }
    };
    parse_one(0, comma, weights.positive);
    parse_one(comma + 1, text.size(), weights.negative);
    if (!(weights.positive > 0.0) || !(weights.negative > 0.0)) {
        throw NonPositiveWeight(std::min(weights.positive, weights.negative));
    }
    return weights;
}

LabeledDataset load_predictions(const std::string& path) {
    if (path == "-") {
        return io::read_predictions(std::cin);
    }
    std::ifstream file(path);
    if (!file) {
        throw io::ParseError(1, 1, "cannot open '" + path + "'");
    }
    return io::read_predictions(file);
}

std::vector<EpochRecord> load_epoch_log(const std::string& path) {
    if (path == "-") {
        return io::read_epoch_log(std::cin);
    }
    std::ifstream file(path);
    if (!file) {
        throw io::ParseError(1, 1, "cannot open '" + path + "'");
    }
    return io::read_epoch_log(file);
}

int run_auc(const Options& options) {
    const LabeledDataset dataset = load_predictions(options.input);
    std::cout << io::render_auc(auc_trapezoid(roc_curve(dataset)), output_format(options));
    return 0;
}

int run_cauc(const Options& options) {
    const LabeledDataset dataset = load_predictions(options.input);
    std::cout << io::render_cauc(cauc(dataset), output_format(options));
    return 0;
}

int run_roc(const Options& options) {
    const LabeledDataset dataset = load_predictions(options.input);
    std::cout << io::render_roc(roc_curve(dataset), output_format(options));
    return 0;
}

int run_table(const Options& options) {
    const LabeledDataset dataset = load_predictions(options.input);
    const MetricsTable table = build_table(dataset);
    const ThresholdMetricsRow* selected = nullptr;
    if (options.has_tpr_floor) {
        selected = &best_row_at_tpr_floor(table, options.tpr_floor, options.fpr_margin);
    }
    std::cout << io::render_table(table, selected, output_format(options));
    return 0;
}

int run_simulate(const Options& options) {
    const RandomTrialConfig config{options.n, options.trials, options.seed};
    const MonteCarloSummary summary = monte_carlo(config, 0);
    std::cout << io::render_simulation(summary, output_format(options));
    return 0;
}

int run_monitor(const Options& options) {
    const std::vector<EpochRecord> log = load_epoch_log(options.input);
    const MetricTrajectory trajectory = compute_trajectory(log, parse_weights(options.weights));

    std::vector<std::pair<StopCriterion, CriterionOutcome>> outcomes;
    if (!options.criterion.empty()) {
        StopCriterion criterion = StopCriterion::max_val_cauc;
        if (options.criterion == "auc") {
            criterion = StopCriterion::max_val_auc;
        } else if (options.criterion == "bce") {
            criterion = StopCriterion::min_val_bce;
        }
        CriterionOutcome outcome;
        outcome.recommendation = recommend_stop(trajectory, criterion);
        if (const EpochMetrics* metrics =
                trajectory.find(outcome.recommendation->epoch, Split::test)) {
            outcome.test_metrics = *metrics;
        }
        outcomes.emplace_back(criterion, outcome);
    } else {
        const CriteriaComparison comparison = compare_criteria(trajectory);
        outcomes.emplace_back(StopCriterion::max_val_cauc, comparison.max_val_cauc);
        outcomes.emplace_back(StopCriterion::max_val_auc, comparison.max_val_auc);
        outcomes.emplace_back(StopCriterion::min_val_bce, comparison.min_val_bce);
        const bool any = comparison.max_val_cauc.recommendation ||
                         comparison.max_val_auc.recommendation ||
                         comparison.min_val_bce.recommendation;
        if (!any) {
            throw NoDefinedMetric();
        }
    }
    std::cout << io::render_monitor(trajectory, outcomes, output_format(options));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary-classification evaluation: ROC curves, AUC, confidence-weighted AUC, "
                 "per-threshold metric tables, random baselines and stop-epoch analysis"};
    app.require_subcommand(1);

    Options options;
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"csv", "structured"}))
        ->capture_default_str();
    app.add_option("--weights", options.weights, "BCE class weights as w+,w-");

    CLI::App* cmd_auc = app.add_subcommand("auc", "AUC of a prediction file");
    cmd_auc->add_option("input", options.input, "Prediction file (- for stdin)")->required();

    CLI::App* cmd_cauc =
        app.add_subcommand("cauc", "AUC, margin coefficients and confidence-weighted AUC");
    cmd_cauc->add_option("input", options.input, "Prediction file (- for stdin)")->required();

    CLI::App* cmd_roc = app.add_subcommand("roc", "ROC points as threshold,fpr,tpr rows");
    cmd_roc->add_option("input", options.input, "Prediction file (- for stdin)")->required();

    CLI::App* cmd_table =
        app.add_subcommand("table", "Per-threshold confusion counts and derived metrics");
    cmd_table->add_option("input", options.input, "Prediction file (- for stdin)")->required();
    cmd_table->add_option("--tpr-floor", options.tpr_floor, "Select the lowest-FPR row with TPR >= floor")
        ->check(CLI::Range(0.0, 1.0));
    cmd_table->add_option("--fpr-margin", options.fpr_margin,
                          "Exclude rows within this margin of the minimum FPR")
        ->check(CLI::Range(0.0, 1.0));

    CLI::App* cmd_simulate =
        app.add_subcommand("simulate", "Monte Carlo AUC/cAUC means over random predictions");
    cmd_simulate->add_option("--n", options.n, "Samples per trial")->check(CLI::Range(2, 1 << 24));
    cmd_simulate->add_option("--trials", options.trials, "Number of trials")
        ->check(CLI::Range(1, 1 << 24));
    cmd_simulate->add_option("--seed", options.seed, "RNG seed");

    CLI::App* cmd_monitor =
        app.add_subcommand("monitor", "Metric trajectories and stop recommendations from an epoch log");
    cmd_monitor->add_option("input", options.input, "Epoch log file (- for stdin)")->required();
    cmd_monitor->add_option("--criterion", options.criterion, "Report a single criterion")
        ->check(CLI::IsMember({"cauc", "auc", "bce"}));

    for (CLI::App* sub : {cmd_auc, cmd_cauc, cmd_roc, cmd_table, cmd_simulate, cmd_monitor}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        return app.exit(error);
    }
    options.has_tpr_floor = cmd_table->count("--tpr-floor") > 0;

    try {
        if (cmd_auc->parsed()) {
            return run_auc(options);
        }
        if (cmd_cauc->parsed()) {
            return run_cauc(options);
        }
        if (cmd_roc->parsed()) {
            return run_roc(options);
        }
        if (cmd_table->parsed()) {
            return run_table(options);
        }
        if (cmd_simulate->parsed()) {
            return run_simulate(options);
        }
        if (cmd_monitor->parsed()) {
            return run_monitor(options);
        }
    } catch (const io::ParseError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitParse;
    } catch (const EmptyInput& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitParse;
    } catch (const NonPositiveWeight& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitParse;
    } catch (const SingleClassInput& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitSingleClass;
    } catch (const NoFeasibleRow& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitNoFeasibleRow;
    } catch (const AllTrialsSkipped& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitAllTrialsSkipped;
    } catch (const NoDefinedMetric& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitNoDefinedMetric;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
