#include <doctest.h>

#include <random>

#include "roceval/dataset.hpp"
#include "support/generators.hpp"

using namespace roceval;

TEST_CASE("validate_dataset accepts a minimal valid input") {
    const LabeledDataset dataset = testutil::make_dataset({1}, {0.5});
    CHECK(dataset.size() == 1);
    CHECK(dataset.samples()[0].label == 1);
    CHECK(dataset.samples()[0].probability == 0.5);
}

TEST_CASE("validate_dataset rejects out-of-range probabilities with the index") {
    try {
        testutil::make_dataset({1}, {1.2});
        FAIL("expected ProbabilityOutOfRange");
    } catch (const ProbabilityOutOfRange& error) {
        CHECK(error.index() == 0);
    }
    try {
        testutil::make_dataset({0, 1}, {0.5, -0.1});
        FAIL("expected ProbabilityOutOfRange");
    } catch (const ProbabilityOutOfRange& error) {
        CHECK(error.index() == 1);
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(testutil::make_dataset({1}, {nan}), ProbabilityOutOfRange);
}

TEST_CASE("validate_dataset rejects labels outside {0,1}") {
    try {
        testutil::make_dataset({0, 2}, {0.5, 0.5});
        FAIL("expected InvalidLabel");
    } catch (const InvalidLabel& error) {
        CHECK(error.index() == 1);
    }
    CHECK_THROWS_AS(testutil::make_dataset({-1}, {0.5}), InvalidLabel);
}

TEST_CASE("validate_dataset rejects empty input") {
    CHECK_THROWS_AS(validate_dataset({}), EmptyInput);
}

TEST_CASE("probabilities of exactly 0 and 1 pass through unclamped") {
    const LabeledDataset dataset = testutil::make_dataset({1, 0}, {1.0, 0.0});
    CHECK(dataset.samples()[0].probability == 1.0);
    CHECK(dataset.samples()[1].probability == 0.0);
}

TEST_CASE("validate_dataset preserves order and duplicates") {
    const LabeledDataset dataset = testutil::make_dataset({1, 0, 1}, {0.7, 0.7, 0.2});
    CHECK(dataset.samples()[0].probability == 0.7);
    CHECK(dataset.samples()[1].probability == 0.7);
    CHECK(dataset.samples()[2].probability == 0.2);
}

TEST_CASE("the 10-row fixture splits into 6 positives and 4 negatives") {
    const LabeledDataset dataset = testutil::random_reference();
    CHECK(dataset.size() == 10);
    const ClassPartition split = partition(dataset);
    CHECK(split.actual_positives.size() == 6);
    CHECK(split.actual_negatives.size() == 4);
    CHECK(*std::max_element(split.actual_positives.begin(), split.actual_positives.end()) ==
          0.803258838);
    CHECK(*std::min_element(split.actual_negatives.begin(), split.actual_negatives.end()) ==
          0.277593543);
}

TEST_CASE("partition routes every probability by its label") {
    const ClassPartition split = partition(testutil::make_dataset({1, 0}, {0.4, 0.6}));
    CHECK(split.actual_positives == std::vector<double>{0.4});
    CHECK(split.actual_negatives == std::vector<double>{0.6});
}

TEST_CASE("partition of a single-class dataset leaves one side empty") {
    const ClassPartition split = partition(testutil::make_dataset({1, 1}, {0.3, 0.7}));
    CHECK(split.actual_positives == std::vector<double>{0.3, 0.7});
    CHECK(split.actual_negatives.empty());
}

TEST_CASE("partition sizes always sum to n") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const LabeledDataset dataset = testutil::random_grid_dataset(rng);
        const ClassPartition split = partition(dataset);
        CHECK(split.actual_positives.size() + split.actual_negatives.size() == dataset.size());
    }
}
