#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roceval {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A dataset or file with zero samples.
class EmptyInput : public Error {
public:
    EmptyInput() : Error("input contains no samples") {}
};

/// A ground-truth label other than 0 or 1.
class InvalidLabel : public Error {
public:
    InvalidLabel(std::size_t index, long long label)
        : Error("label " + std::to_string(label) + " at index " + std::to_string(index) +
                " is not 0 or 1"),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// A predicted probability outside the closed unit interval.
class ProbabilityOutOfRange : public Error {
public:
    ProbabilityOutOfRange(std::size_t index, double value)
        : Error("probability " + std::to_string(value) + " at index " + std::to_string(index) +
                " is outside [0, 1]"),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// An operation that needs both actual positives and actual negatives was
/// given a dataset with only one class.
class SingleClassInput : public Error {
public:
    SingleClassInput() : Error("dataset must contain both actual positives and actual negatives") {}
};

/// A BCE class weight that is not strictly positive.
class NonPositiveWeight : public Error {
public:
    explicit NonPositiveWeight(double weight)
        : Error("class weight " + std::to_string(weight) + " must be > 0") {}
};

/// No metrics-table row satisfies the requested TPR floor (and FPR margin).
class NoFeasibleRow : public Error {
public:
    NoFeasibleRow() : Error("no row satisfies the requested constraints") {}
};

/// A scenario parameterization produced a probability outside [0, 1].
class ProbabilityOverflow : public Error {
public:
    explicit ProbabilityOverflow(double value)
        : Error("generated probability " + std::to_string(value) + " leaves [0, 1]") {}
};

/// Every Monte Carlo trial was single-class and had to be skipped.
class AllTrialsSkipped : public Error {
public:
    AllTrialsSkipped() : Error("all trials were skipped (single-class draws)") {}
};

/// Two epoch records share the same (epoch, split) key.
class DuplicateEpochSplit : public Error {
public:
    DuplicateEpochSplit(int epoch, const std::string& split)
        : Error("duplicate record for epoch " + std::to_string(epoch) + ", split " + split) {}
};

/// No validation entry defines the metric a stop criterion needs.
class NoDefinedMetric : public Error {
public:
    NoDefinedMetric() : Error("no validation entry defines the requested metric") {}
};

}  // namespace roceval
