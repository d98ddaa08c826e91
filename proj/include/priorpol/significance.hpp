#pragma once

// Significance tests for comparing two formulae over the same words.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "priorpol/classification.hpp"
#include "priorpol/evaluation.hpp"

namespace priorpol {

struct TestResult {
    double statistic{0.0};
    double p_value{1.0};
    std::optional<double> df;
    std::string method;
};

// Two-tailed paired t on d = a - b. Throws Error when n < 2, lengths differ,
// or all differences equal a nonzero constant. All-zero differences give
// t = 0, p = 1.
[[nodiscard]] TestResult paired_t_test(std::span<const double> errors_a, std::span<const double> errors_b);

// 2x2 chi-square without continuity correction, 1 df. Throws Error on a zero
// marginal total.
[[nodiscard]] TestResult chi_square_success(std::size_t a_success, std::size_t a_fail, std::size_t b_success,
                                            std::size_t b_fail);

inline constexpr std::size_t kDefaultIterations = 10000;
inline constexpr std::size_t kMinIterations = 100;

// Metric differences |m(A*) - m(B*)| for R shuffles. Shuffle r swaps each
// item's A and B predictions with probability 1/2, drawing from the substream
// (seed, r), so the result does not depend on iteration order.
[[nodiscard]] std::vector<double> randomization_null(std::span<const Label> predictions_a,
                                                     std::span<const Label> predictions_b, std::span<const Label> gold,
                                                     ClassMetric metric, std::size_t iterations, std::uint64_t seed);

// (|{null >= observed}| + 1) / (R + 1).
[[nodiscard]] double randomization_p_value(double observed, std::span<const double> null_deltas);

// Approximate randomization test on a classification metric. Throws Error on
// length mismatch or R < 100.
[[nodiscard]] TestResult approx_randomization(std::span<const Label> predictions_a,
                                              std::span<const Label> predictions_b, std::span<const Label> gold,
                                              ClassMetric metric, std::size_t iterations = kDefaultIterations,
                                              std::uint64_t seed = 42);

// "***", "**", "*" below 0.001, 0.01, 0.05; empty otherwise.
[[nodiscard]] std::string stars(double p_value);

enum class RegressionMetric { mae, success };

[[nodiscard]] std::string_view regression_metric_name(RegressionMetric metric) noexcept;
[[nodiscard]] std::optional<RegressionMetric> parse_regression_metric(std::string_view name) noexcept;

// MAE: paired t on per-word absolute errors. Success: chi-square on success
// counts. Throws Error when the reports do not cover the same keys in order.
[[nodiscard]] TestResult compare_reports(const EvalReport& a, const EvalReport& b, RegressionMetric metric);

struct SignificanceMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<TestResult>> cells;  // symmetric; diagonal p = 1

    [[nodiscard]] const TestResult& at(std::string_view a, std::string_view b) const;
};

[[nodiscard]] SignificanceMatrix significance_matrix(std::span<const EvalReport> reports, RegressionMetric metric);
[[nodiscard]] SignificanceMatrix significance_matrix(const ClassificationRun& run, ClassMetric metric,
                                                     std::size_t iterations = kDefaultIterations,
                                                     std::uint64_t seed = 42);

}  // namespace priorpol
