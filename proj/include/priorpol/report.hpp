#pragma once

// Text renderings of evaluation results: TSV tables and JSON.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "priorpol/alignment.hpp"
#include "priorpol/classification.hpp"
#include "priorpol/evaluation.hpp"
#include "priorpol/significance.hpp"

namespace priorpol {

// 3 decimals; an undefined value prints as "inf".
[[nodiscard]] std::string format_metric(std::optional<double> value);

// Columns in report order, rows MAE / success / s/e.
[[nodiscard]] std::string regression_table(std::span<const EvalReport> reports);
// Columns in report order, rows Precision / Recall / F1.
[[nodiscard]] std::string classification_table(std::span<const ClassReport> reports);

[[nodiscard]] std::string regression_json(std::span<const EvalReport> reports, std::uint64_t seed);
[[nodiscard]] std::string classification_json(const ClassificationRun& run, std::span<const ClassReport> reports,
                                              std::uint64_t seed);

// `word<TAB>lemma#pos<TAB>valence_mu<TAB>valence_sigma<TAB>source` per item.
[[nodiscard]] std::string alignment_table(const AlignedDataset& dataset);
[[nodiscard]] std::string alignment_json(const AlignedDataset& dataset);
// Multi-line summary for the diagnostics stream.
[[nodiscard]] std::string alignment_summary(const AlignedDataset& dataset);

// `a<TAB>b<TAB>metric<TAB>method<TAB>statistic<TAB>df<TAB>p<TAB>stars`, p to
// 4 significant digits.
[[nodiscard]] std::string test_result_line(std::string_view a, std::string_view b, std::string_view metric,
                                           const TestResult& result);
[[nodiscard]] std::string test_result_json(std::string_view a, std::string_view b, std::string_view metric,
                                           const TestResult& result);

}  // namespace priorpol
