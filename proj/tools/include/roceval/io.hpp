#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "roceval/confidence.hpp"
#include "roceval/dataset.hpp"
#include "roceval/metric_table.hpp"
#include "roceval/monitor.hpp"
#include "roceval/roc.hpp"
#include "roceval/scenario.hpp"

namespace roceval::io {

/// Positioned failure while reading an input file. Line and column are
/// 1-based; the column points at the offending field.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class OutputFormat { csv, structured };

/// Reads a prediction file: either CSV with the header `label,prob`, or
/// line-delimited JSON records with fields `label` and `prob` (detected by a
/// leading '{'). Throws ParseError for malformed rows and EmptyInput when no
/// data rows are present.
LabeledDataset read_predictions(std::istream& in);

/// Reads an epoch log: CSV with the header `epoch,split,label,prob`, or
/// line-delimited JSON records with those fields. Rows sharing an
/// (epoch, split) key are grouped in file order regardless of interleaving.
std::vector<EpochRecord> read_epoch_log(std::istream& in);

/// Shortest decimal string that parses back to exactly the same double, so
/// emitted values can be compared by string.
std::string format_double(double value);

std::string render_auc(double auc, OutputFormat format);
std::string render_cauc(const CaucResult& result, OutputFormat format);
std::string render_roc(const RocCurve& curve, OutputFormat format);

/// `selected` is the optional best_row_at_tpr_floor pick appended after the
/// table. Undefined metrics serialize as empty CSV fields and JSON nulls.
std::string render_table(const MetricsTable& table, const ThresholdMetricsRow* selected,
                         OutputFormat format);

std::string render_simulation(const MonteCarloSummary& summary, OutputFormat format);

std::string render_monitor(const MetricTrajectory& trajectory,
                           const std::vector<std::pair<StopCriterion, CriterionOutcome>>& outcomes,
                           OutputFormat format);

}  // namespace roceval::io
