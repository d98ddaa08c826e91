#pragma once

// Regression metrics against the gold valence: MAE, success rate and their
// ratio, plus the affective-subset filter.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "priorpol/alignment.hpp"
#include "priorpol/formulae.hpp"
#include "priorpol/lexicon.hpp"

namespace priorpol {

enum class Subset { all, affective };

[[nodiscard]] std::string_view subset_name(Subset subset) noexcept;
[[nodiscard]] std::optional<Subset> parse_subset(std::string_view name) noexcept;

// Success requires |z| strictly below this.
inline constexpr double kSuccessZ = 0.5;

struct Prediction {
    double prediction{0.0};
    double gold_mu{0.0};
    double gold_sigma{0.0};
};

struct EvalRow {
    LemmaKey key;
    double prediction{0.0};
    double gold_mu{0.0};
    double gold_sigma{0.0};
    double abs_error{0.0};
    std::optional<double> zscore;  // empty when gold_sigma == 0
    bool success{false};
};

struct EvalReport {
    std::string formula;
    Subset subset{Subset::all};
    double mae{0.0};
    double success_rate{0.0};
    std::optional<double> s_over_e;  // empty when mae == 0
    std::size_t tie_count{0};        // rows decided by a tie policy
    std::vector<EvalRow> rows;

    [[nodiscard]] std::size_t success_count() const noexcept;
};

[[nodiscard]] bool is_success(double prediction, double gold_mu, double gold_sigma) noexcept;
[[nodiscard]] EvalRow make_row(const LemmaKey& key, double prediction, const GoldEntry& gold);

// Both throw Error on an empty list.
[[nodiscard]] double mae(std::span<const Prediction> rows);
[[nodiscard]] double success_rate(std::span<const Prediction> rows);

[[nodiscard]] std::optional<double> s_over_e(double success, double mae) noexcept;

// Items with at least one nonzero sense score. Throws if a key is unknown.
[[nodiscard]] AlignedDataset filter_affective(const AlignedDataset& dataset, const Lexicon& lexicon);
[[nodiscard]] AlignedDataset select_subset(const AlignedDataset& dataset, const Lexicon& lexicon, Subset subset);

using Scorer = std::function<double(const AlignedItem&)>;

[[nodiscard]] EvalReport evaluate_scorer(const AlignedDataset& dataset, std::string name, const Scorer& scorer,
                                         Subset subset = Subset::all);

// One report per formula over identical rows, sorted by sort_reports().
[[nodiscard]] std::vector<EvalReport> evaluate_formulae(const AlignedDataset& dataset, const Lexicon& lexicon,
                                                        std::span<const FormulaId> formulas, std::uint64_t seed,
                                                        Subset subset = Subset::all);

// s/e descending (undefined counts as +inf), then formula name ascending.
void sort_reports(std::vector<EvalReport>& reports);

}  // namespace priorpol
