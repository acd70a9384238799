#include "roceval/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <string_view>

#include <json.hpp>

namespace roceval::io {

namespace {

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based offset of the field start within the line
};

std::vector<Field> split_csv(std::string_view line) {
    std::vector<Field> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
        fields.push_back(Field{line.substr(start, end - start), start + 1});
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

bool blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

double parse_probability(const Field& field, std::size_t line_number) {
    double value = 0.0;
    const char* begin = field.text.data();
    const char* end = begin + field.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.text.empty()) {
        throw ParseError(line_number, field.column,
                         "expected a probability, got '" + std::string(field.text) + "'");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ParseError(line_number, field.column,
                         "probability " + std::string(field.text) + " is outside [0, 1]");
    }
    return value;
}

int parse_label(const Field& field, std::size_t line_number) {
    if (field.text == "0") {
        return 0;
    }
    if (field.text == "1") {
        return 1;
    }
    throw ParseError(line_number, field.column,
                     "label must be 0 or 1, got '" + std::string(field.text) + "'");
}

int parse_epoch(const Field& field, std::size_t line_number) {
    int value = 0;
    const char* begin = field.text.data();
    const char* end = begin + field.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.text.empty() || value < 0) {
        throw ParseError(line_number, field.column,
                         "expected a non-negative epoch, got '" + std::string(field.text) + "'");
    }
    return value;
}

std::optional<Split> parse_split(std::string_view text) {
    if (text == "train") {
        return Split::train;
    }
    if (text == "validation") {
        return Split::validation;
    }
    if (text == "test") {
        return Split::test;
    }
    return std::nullopt;
}

nlohmann::json parse_json_line(std::string_view line, std::size_t line_number) {
    try {
        return nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& error) {
        throw ParseError(line_number, error.byte == 0 ? 1 : error.byte, "invalid JSON record");
    }
}

double json_probability(const nlohmann::json& record, std::size_t line_number) {
    if (!record.contains("prob") || !record["prob"].is_number()) {
        throw ParseError(line_number, 1, "record is missing a numeric 'prob' field");
    }
    const double value = record["prob"].get<double>();
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ParseError(line_number, 1, "probability is outside [0, 1]");
    }
    return value;
}

int json_label(const nlohmann::json& record, std::size_t line_number) {
    if (!record.contains("label") || !record["label"].is_number_integer()) {
        throw ParseError(line_number, 1, "record is missing an integer 'label' field");
    }
    const auto value = record["label"].get<std::int64_t>();
    if (value != 0 && value != 1) {
        throw ParseError(line_number, 1, "label must be 0 or 1");
    }
    return static_cast<int>(value);
}

struct Line {
    std::string text;
    std::size_t number;
};

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string buffer;
    std::size_t number = 0;
    while (std::getline(in, buffer)) {
        ++number;
        if (blank(buffer)) {
            continue;
        }
        lines.push_back(Line{std::string(strip_cr(buffer)), number});
    }
    return lines;
}

bool looks_like_json(const std::vector<Line>& lines) {
    if (lines.empty()) {
        return false;
    }
    const std::size_t first = lines.front().text.find_first_not_of(" \t");
    return first != std::string::npos && lines.front().text[first] == '{';
}

void require_header(const std::vector<Line>& lines, std::string_view expected) {
    if (lines.empty()) {
        throw EmptyInput();
    }
    if (lines.front().text != expected) {
        throw ParseError(lines.front().number, 1,
                         "expected header '" + std::string(expected) + "'");
    }
}

std::string json_metric(const std::optional<double>& value) {
    return value ? format_double(*value) : "null";
}

std::string csv_metric(const std::optional<double>& value) {
    return value ? format_double(*value) : "";
}

constexpr std::string_view kTableHeader =
    "threshold,tp,tn,fp,fn,tpr,fpr,specificity,accuracy,precision,f1";

void append_table_row_csv(std::string& out, const ThresholdMetricsRow& row) {
    out += format_double(row.threshold);
    out += ',' + std::to_string(row.tp) + ',' + std::to_string(row.tn) + ',' +
           std::to_string(row.fp) + ',' + std::to_string(row.fn);
    out += ',' + csv_metric(row.metrics.tpr) + ',' + csv_metric(row.metrics.fpr) + ',' +
           csv_metric(row.metrics.specificity) + ',' + csv_metric(row.metrics.accuracy) + ',' +
           csv_metric(row.metrics.precision) + ',' + csv_metric(row.metrics.f1);
    out += '\n';
}

void append_table_row_json(std::string& out, const ThresholdMetricsRow& row) {
    out += "{\"threshold\":" + format_double(row.threshold);
    out += ",\"tp\":" + std::to_string(row.tp) + ",\"tn\":" + std::to_string(row.tn) +
           ",\"fp\":" + std::to_string(row.fp) + ",\"fn\":" + std::to_string(row.fn);
    out += ",\"tpr\":" + json_metric(row.metrics.tpr) + ",\"fpr\":" + json_metric(row.metrics.fpr) +
           ",\"specificity\":" + json_metric(row.metrics.specificity) +
           ",\"accuracy\":" + json_metric(row.metrics.accuracy) +
           ",\"precision\":" + json_metric(row.metrics.precision) +
           ",\"f1\":" + json_metric(row.metrics.f1) + "}";
}

}  // namespace

LabeledDataset read_predictions(std::istream& in) {
    const std::vector<Line> lines = read_lines(in);
    std::vector<std::pair<int, double>> raw;

    if (looks_like_json(lines)) {
        for (const Line& line : lines) {
            const nlohmann::json record = parse_json_line(line.text, line.number);
            raw.emplace_back(json_label(record, line.number),
                             json_probability(record, line.number));
        }
    } else {
        require_header(lines, "label,prob");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const std::vector<Field> fields = split_csv(lines[i].text);
            if (fields.size() != 2) {
                throw ParseError(lines[i].number, 1, "expected 2 fields (label,prob)");
            }
            raw.emplace_back(parse_label(fields[0], lines[i].number),
                             parse_probability(fields[1], lines[i].number));
        }
    }
    if (raw.empty()) {
        throw EmptyInput();
    }
    return validate_dataset(raw);
}

std::vector<EpochRecord> read_epoch_log(std::istream& in) {
    const std::vector<Line> lines = read_lines(in);
    // Keys are ordered, so the resulting log is sorted by (epoch, split);
    // rows within a group keep their file order.
    std::map<std::pair<int, int>, std::vector<std::pair<int, double>>> groups;

    const auto add_row = [&groups](int epoch, Split split, int label, double probability) {
        groups[{epoch, static_cast<int>(split)}].emplace_back(label, probability);
    };

    if (looks_like_json(lines)) {
        for (const Line& line : lines) {
            const nlohmann::json record = parse_json_line(line.text, line.number);
            if (!record.contains("epoch") || !record["epoch"].is_number_integer() ||
                record["epoch"].get<std::int64_t>() < 0) {
                throw ParseError(line.number, 1, "record is missing a non-negative 'epoch' field");
            }
            if (!record.contains("split") || !record["split"].is_string()) {
                throw ParseError(line.number, 1, "record is missing a 'split' field");
            }
            const auto split = parse_split(record["split"].get<std::string>());
            if (!split) {
                throw ParseError(line.number, 1, "split must be train, validation or test");
            }
            add_row(static_cast<int>(record["epoch"].get<std::int64_t>()), *split,
                    json_label(record, line.number), json_probability(record, line.number));
        }
    } else {
        require_header(lines, "epoch,split,label,prob");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const std::vector<Field> fields = split_csv(lines[i].text);
            if (fields.size() != 4) {
                throw ParseError(lines[i].number, 1, "expected 4 fields (epoch,split,label,prob)");
            }
            const auto split = parse_split(fields[1].text);
            if (!split) {
                throw ParseError(lines[i].number, fields[1].column,
                                 "split must be train, validation or test, got '" +
                                     std::string(fields[1].text) + "'");
            }
            add_row(parse_epoch(fields[0], lines[i].number), *split,
                    parse_label(fields[2], lines[i].number),
                    parse_probability(fields[3], lines[i].number));
        }
    }
    if (groups.empty()) {
        throw EmptyInput();
    }

    std::vector<EpochRecord> log;
    log.reserve(groups.size());
    for (const auto& [key, rows] : groups) {
        log.push_back(
            EpochRecord{key.first, static_cast<Split>(key.second), validate_dataset(rows)});
    }
    return log;
}

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string render_auc(double auc, OutputFormat format) {
    if (format == OutputFormat::csv) {
        return format_double(auc) + "\n";
    }
    return "{\"auc\":" + format_double(auc) + "}\n";
}

std::string render_cauc(const CaucResult& result, OutputFormat format) {
    if (format == OutputFormat::csv) {
        return "auc,alpha,beta,cauc\n" + format_double(result.auc) + ',' +
               format_double(result.coefficients.alpha) + ',' +
               format_double(result.coefficients.beta) + ',' + format_double(result.cauc) + "\n";
    }
    return "{\"auc\":" + format_double(result.auc) +
           ",\"alpha\":" + format_double(result.coefficients.alpha) +
           ",\"beta\":" + format_double(result.coefficients.beta) +
           ",\"cauc\":" + format_double(result.cauc) + "}\n";
}

std::string render_roc(const RocCurve& curve, OutputFormat format) {
    std::string out;
    if (format == OutputFormat::csv) {
        out = "threshold,fpr,tpr\n";
        for (const RocPoint& point : curve.points) {
            out += format_double(point.threshold) + ',' + format_double(point.fpr) + ',' +
                   format_double(point.tpr) + '\n';
        }
        return out;
    }
    out = "{\"points\":[";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const RocPoint& point = curve.points[i];
        if (i > 0) {
            out += ',';
        }
        out += "{\"threshold\":" + format_double(point.threshold) +
               ",\"fpr\":" + format_double(point.fpr) + ",\"tpr\":" + format_double(point.tpr) +
               "}";
    }
    out += "]}\n";
    return out;
}

std::string render_table(const MetricsTable& table, const ThresholdMetricsRow* selected,
                         OutputFormat format) {
    std::string out;
    if (format == OutputFormat::csv) {
        out = std::string(kTableHeader) + '\n';
        for (const ThresholdMetricsRow& row : table.rows) {
            append_table_row_csv(out, row);
        }
        if (selected != nullptr) {
            out += "\nselected\n";
            out += std::string(kTableHeader) + '\n';
            append_table_row_csv(out, *selected);
        }
        return out;
    }
    out = "{\"rows\":[";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        append_table_row_json(out, table.rows[i]);
    }
    out += "]";
    if (selected != nullptr) {
        out += ",\"selected\":";
        append_table_row_json(out, *selected);
    }
    out += "}\n";
    return out;
}

std::string render_simulation(const MonteCarloSummary& summary, OutputFormat format) {
    if (format == OutputFormat::csv) {
        return "mean_auc,mean_cauc,trials_completed,trials_skipped\n" +
               format_double(summary.mean_auc) + ',' + format_double(summary.mean_cauc) + ',' +
               std::to_string(summary.trials_completed) + ',' +
               std::to_string(summary.trials_skipped) + "\n";
    }
    return "{\"mean_auc\":" + format_double(summary.mean_auc) +
           ",\"mean_cauc\":" + format_double(summary.mean_cauc) +
           ",\"trials_completed\":" + std::to_string(summary.trials_completed) +
           ",\"trials_skipped\":" + std::to_string(summary.trials_skipped) + "}\n";
}

std::string render_monitor(const MetricTrajectory& trajectory,
                           const std::vector<std::pair<StopCriterion, CriterionOutcome>>& outcomes,
                           OutputFormat format) {
    std::string out;
    if (format == OutputFormat::csv) {
        out = "epoch,split,bce,auc,cauc\n";
        for (const TrajectoryEntry& entry : trajectory.entries) {
            out += std::to_string(entry.epoch) + ',' + std::string(split_name(entry.split)) + ',' +
                   format_double(entry.metrics.bce) + ',' + csv_metric(entry.metrics.auc) + ',' +
                   csv_metric(entry.metrics.cauc) + '\n';
        }
        out += "\ncriterion,epoch,value,test_bce,test_auc,test_cauc\n";
        for (const auto& [criterion, outcome] : outcomes) {
            if (!outcome.recommendation) {
                continue;
            }
            out += std::string(criterion_name(criterion)) + ',' +
                   std::to_string(outcome.recommendation->epoch) + ',' +
                   format_double(outcome.recommendation->value);
            if (outcome.test_metrics) {
                out += ',' + format_double(outcome.test_metrics->bce) + ',' +
                       csv_metric(outcome.test_metrics->auc) + ',' +
                       csv_metric(outcome.test_metrics->cauc);
            } else {
                out += ",,,";
            }
            out += '\n';
        }
        return out;
    }

    out = "{\"trajectory\":[";
    for (std::size_t i = 0; i < trajectory.entries.size(); ++i) {
        const TrajectoryEntry& entry = trajectory.entries[i];
        if (i > 0) {
            out += ',';
        }
        out += "{\"epoch\":" + std::to_string(entry.epoch) + ",\"split\":\"" +
               std::string(split_name(entry.split)) + "\",\"bce\":" +
               format_double(entry.metrics.bce) + ",\"auc\":" + json_metric(entry.metrics.auc) +
               ",\"cauc\":" + json_metric(entry.metrics.cauc) + "}";
    }
    out += "],\"recommendations\":[";
    bool first = true;
    for (const auto& [criterion, outcome] : outcomes) {
        if (!outcome.recommendation) {
            continue;
        }
        if (!first) {
            out += ',';
        }
        first = false;
        out += "{\"criterion\":\"" + std::string(criterion_name(criterion)) + "\",\"epoch\":" +
               std::to_string(outcome.recommendation->epoch) +
               ",\"value\":" + format_double(outcome.recommendation->value) + ",\"test\":";
        if (outcome.test_metrics) {
            out += "{\"bce\":" + format_double(outcome.test_metrics->bce) +
                   ",\"auc\":" + json_metric(outcome.test_metrics->auc) +
                   ",\"cauc\":" + json_metric(outcome.test_metrics->cauc) + "}";
        } else {
            out += "null";
        }
        out += "}";
    }
    out += "]}\n";
    return out;
}

}  // namespace roceval::io
