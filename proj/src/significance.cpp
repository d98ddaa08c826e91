#include "priorpol/significance.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "priorpol/error.hpp"
#include "priorpol/random_stream.hpp"
#include "priorpol/special_functions.hpp"

namespace priorpol {

namespace {

// Slack for floating equality of metric differences computed along
// different summation paths.
constexpr double kDeltaSlack = 1e-12;

double metric_of(std::span<const Label> predicted, std::span<const Label> gold, ClassMetric metric)
{
    if (metric == ClassMetric::accuracy) {
        return accuracy(predicted, gold);
    }
    return metric_value(classification_report(predicted, gold), metric);
}

void require_same_keys(const EvalReport& a, const EvalReport& b)
{
    if (a.rows.size() != b.rows.size()) {
        throw Error(fmt::format("reports {} and {} cover different word sets", a.formula, b.formula));
    }
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].key != b.rows[i].key) {
            throw Error(fmt::format("reports {} and {} cover different word sets", a.formula, b.formula));
        }
    }
}

SignificanceMatrix make_matrix(std::vector<std::string> names)
{
    SignificanceMatrix matrix;
    const auto n = names.size();
    matrix.names = std::move(names);
    matrix.cells.assign(n, std::vector<TestResult>(n));
    return matrix;
}

}  // namespace

TestResult paired_t_test(std::span<const double> errors_a, std::span<const double> errors_b)
{
    if (errors_a.size() != errors_b.size()) {
        throw Error("paired t-test needs equal-length samples");
    }
    const auto n = errors_a.size();
    if (n < 2) {
        throw Error("paired t-test needs at least two pairs");
    }
    std::vector<double> diffs(n);
    for (std::size_t i = 0; i < n; ++i) {
        diffs[i] = errors_a[i] - errors_b[i];
    }
    const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (const double d : diffs) {
        ss += (d - mean) * (d - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    const double df = static_cast<double>(n - 1);

    TestResult result;
    result.method = "paired t-test";
    result.df = df;
    if (sd == 0.0) {
        if (mean != 0.0) {
            throw Error("paired t-test: differences are a nonzero constant (degenerate variance)");
        }
        result.statistic = 0.0;
        result.p_value = 1.0;
        return result;
    }
    result.statistic = mean * std::sqrt(static_cast<double>(n)) / sd;
    result.p_value = student_t_two_tailed(result.statistic, df);
    return result;
}

TestResult chi_square_success(std::size_t a_success, std::size_t a_fail, std::size_t b_success, std::size_t b_fail)
{
    const auto a = static_cast<double>(a_success);
    const auto b = static_cast<double>(a_fail);
    const auto c = static_cast<double>(b_success);
    const auto d = static_cast<double>(b_fail);
    const double row1 = a + b;
    const double row2 = c + d;
    const double col1 = a + c;
    const double col2 = b + d;
    if (row1 == 0.0 || row2 == 0.0 || col1 == 0.0 || col2 == 0.0) {
        throw Error("chi-square: degenerate table (a marginal total is zero)");
    }
    const double cross = a * d - b * c;
    TestResult result;
    result.method = "chi-square";
    result.df = 1.0;
    result.statistic = (row1 + row2) * cross * cross / (row1 * row2 * col1 * col2);
    result.p_value = chi_square_1df_upper(result.statistic);
    return result;
}

std::vector<double> randomization_null(std::span<const Label> predictions_a, std::span<const Label> predictions_b,
                                       std::span<const Label> gold, ClassMetric metric, std::size_t iterations,
                                       std::uint64_t seed)
{
    if (predictions_a.size() != predictions_b.size() || predictions_a.size() != gold.size()) {
        throw Error("approximate randomization: prediction and gold lists differ in length");
    }
    const RandomStream stream{seed};
    const auto n = gold.size();
    std::vector<Label> shuffled_a(n);
    std::vector<Label> shuffled_b(n);
    std::vector<double> deltas;
    deltas.reserve(iterations);
    for (std::size_t r = 0; r < iterations; ++r) {
        auto engine = stream.substream("approx-randomization", r);
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i % 64 == 0) {
                bits = engine();
            }
            const bool swap = (bits >> (i % 64)) & 1U;
            shuffled_a[i] = swap ? predictions_b[i] : predictions_a[i];
            shuffled_b[i] = swap ? predictions_a[i] : predictions_b[i];
        }
        deltas.push_back(std::abs(metric_of(shuffled_a, gold, metric) - metric_of(shuffled_b, gold, metric)));
    }
    return deltas;
}

double randomization_p_value(double observed, std::span<const double> null_deltas)
{
    const auto at_least = std::count_if(null_deltas.begin(), null_deltas.end(),
                                        [&](double delta) { return delta >= observed - kDeltaSlack; });
    return static_cast<double>(at_least + 1) / static_cast<double>(null_deltas.size() + 1);
}

TestResult approx_randomization(std::span<const Label> predictions_a, std::span<const Label> predictions_b,
                                std::span<const Label> gold, ClassMetric metric, std::size_t iterations,
                                std::uint64_t seed)
{
    if (predictions_a.size() != predictions_b.size() || predictions_a.size() != gold.size()) {
        throw Error("approximate randomization: prediction and gold lists differ in length");
    }
    if (iterations < kMinIterations) {
        throw Error(fmt::format("approximate randomization needs at least {} iterations", kMinIterations));
    }
    const double observed =
        std::abs(metric_of(predictions_a, gold, metric) - metric_of(predictions_b, gold, metric));
    const auto null = randomization_null(predictions_a, predictions_b, gold, metric, iterations, seed);

    TestResult result;
    result.method = fmt::format("approximate randomization ({}, R={})", class_metric_name(metric), iterations);
    result.statistic = observed;
    result.p_value = randomization_p_value(observed, null);
    return result;
}

std::string stars(double p_value)
{
    if (p_value < 0.001) {
        return "***";
    }
    if (p_value < 0.01) {
        return "**";
    }
    if (p_value < 0.05) {
        return "*";
    }
    return {};
}

std::string_view regression_metric_name(RegressionMetric metric) noexcept
{
    return metric == RegressionMetric::mae ? "mae" : "success";
}

std::optional<RegressionMetric> parse_regression_metric(std::string_view name) noexcept
{
    if (name == "mae") {
        return RegressionMetric::mae;
    }
    if (name == "success") {
        return RegressionMetric::success;
    }
    return std::nullopt;
}

TestResult compare_reports(const EvalReport& a, const EvalReport& b, RegressionMetric metric)
{
    require_same_keys(a, b);
    if (metric == RegressionMetric::mae) {
        std::vector<double> errors_a;
        std::vector<double> errors_b;
        errors_a.reserve(a.rows.size());
        errors_b.reserve(b.rows.size());
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            errors_a.push_back(a.rows[i].abs_error);
            errors_b.push_back(b.rows[i].abs_error);
        }
        return paired_t_test(errors_a, errors_b);
    }
    const auto n = a.rows.size();
    const auto hits_a = a.success_count();
    const auto hits_b = b.success_count();
    if (hits_a == hits_b && (hits_a == 0 || hits_a == n)) {
        // Both systems all-success or all-failure: the table is degenerate
        // but the proportions are identical.
        return TestResult{0.0, 1.0, 1.0, "chi-square"};
    }
    return chi_square_success(hits_a, n - hits_a, hits_b, n - hits_b);
}

const TestResult& SignificanceMatrix::at(std::string_view a, std::string_view b) const
{
    const auto find = [&](std::string_view name) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) {
                return i;
            }
        }
        throw Error("unknown system '" + std::string(name) + "' in significance matrix");
    };
    return cells[find(a)][find(b)];
}

SignificanceMatrix significance_matrix(std::span<const EvalReport> reports, RegressionMetric metric)
{
    if (reports.size() < 2) {
        throw Error("significance matrix needs at least two reports");
    }
    std::vector<std::string> names;
    for (const auto& r : reports) {
        names.push_back(r.formula);
    }
    auto matrix = make_matrix(std::move(names));
    for (std::size_t i = 0; i < reports.size(); ++i) {
        require_same_keys(reports[0], reports[i]);
        matrix.cells[i][i].method = metric == RegressionMetric::mae ? "paired t-test" : "chi-square";
        for (std::size_t j = i + 1; j < reports.size(); ++j) {
            auto result = compare_reports(reports[i], reports[j], metric);
            matrix.cells[j][i] = result;
            if (metric == RegressionMetric::mae) {
                // t is signed by direction; chi-square is not.
                matrix.cells[j][i].statistic = -result.statistic;
            }
            matrix.cells[i][j] = std::move(result);
        }
    }
    return matrix;
}

SignificanceMatrix significance_matrix(const ClassificationRun& run, ClassMetric metric, std::size_t iterations,
                                       std::uint64_t seed)
{
    if (run.systems.size() < 2) {
        throw Error("significance matrix needs at least two systems");
    }
    std::vector<std::string> names;
    for (const auto& s : run.systems) {
        names.push_back(s.name);
    }
    auto matrix = make_matrix(std::move(names));
    for (std::size_t i = 0; i < run.systems.size(); ++i) {
        matrix.cells[i][i].method = "approximate randomization";
        for (std::size_t j = i + 1; j < run.systems.size(); ++j) {
            auto result = approx_randomization(run.systems[i].predictions, run.systems[j].predictions, run.gold, metric,
                                               iterations, seed);
            matrix.cells[j][i] = result;
            matrix.cells[i][j] = std::move(result);
        }
    }
    return matrix;
}

}  // namespace priorpol
