#include "priorpol/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "priorpol/error.hpp"

namespace priorpol {

std::string_view subset_name(Subset subset) noexcept
{
    return subset == Subset::all ? "all" : "affective";
}

std::optional<Subset> parse_subset(std::string_view name) noexcept
{
    if (name == "all") {
        return Subset::all;
    }
    if (name == "affective") {
        return Subset::affective;
    }
    return std::nullopt;
}

std::size_t EvalReport::success_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const EvalRow& r) { return r.success; }));
}

bool is_success(double prediction, double gold_mu, double gold_sigma) noexcept
{
    return gold_sigma > 0.0 && std::abs(prediction - gold_mu) < kSuccessZ * gold_sigma;
}

EvalRow make_row(const LemmaKey& key, double prediction, const GoldEntry& gold)
{
    EvalRow row;
    row.key = key;
    row.prediction = prediction;
    row.gold_mu = gold.valence_mu;
    row.gold_sigma = gold.valence_sigma;
    row.abs_error = std::abs(prediction - gold.valence_mu);
    if (gold.valence_sigma > 0.0) {
        row.zscore = (prediction - gold.valence_mu) / gold.valence_sigma;
    }
    row.success = is_success(prediction, gold.valence_mu, gold.valence_sigma);
    return row;
}

double mae(std::span<const Prediction> rows)
{
    if (rows.empty()) {
        throw Error("MAE of an empty list");
    }
    double total = 0.0;
    for (const auto& r : rows) {
        total += std::abs(r.prediction - r.gold_mu);
    }
    return total / static_cast<double>(rows.size());
}

double success_rate(std::span<const Prediction> rows)
{
    if (rows.empty()) {
        throw Error("success rate of an empty list");
    }
    const auto hits = std::count_if(rows.begin(), rows.end(), [](const Prediction& r) {
        return is_success(r.prediction, r.gold_mu, r.gold_sigma);
    });
    return static_cast<double>(hits) / static_cast<double>(rows.size());
}

std::optional<double> s_over_e(double success, double mae) noexcept
{
    if (mae <= 0.0) {
        return std::nullopt;
    }
    return success / mae;
}

AlignedDataset filter_affective(const AlignedDataset& dataset, const Lexicon& lexicon)
{
    AlignedDataset out;
    out.source_word_count = dataset.source_word_count;
    out.dropped = dataset.dropped;
    const GoldEntry* last_gold = nullptr;
    for (const auto& item : dataset.items) {
        const auto* senses = lexicon.find(item.key);
        if (senses == nullptr) {
            throw Error("aligned key " + item.key.str() + " is not in the lexicon");
        }
        if (senses->all_zero()) {
            continue;
        }
        out.items.push_back(item);
        if (item.gold.get() != last_gold) {
            ++out.lemma_count;
            last_gold = item.gold.get();
        }
    }
    return out;
}

AlignedDataset select_subset(const AlignedDataset& dataset, const Lexicon& lexicon, Subset subset)
{
    return subset == Subset::affective ? filter_affective(dataset, lexicon) : dataset;
}

EvalReport evaluate_scorer(const AlignedDataset& dataset, std::string name, const Scorer& scorer, Subset subset)
{
    if (dataset.empty()) {
        throw Error("cannot evaluate an empty dataset");
    }
    EvalReport report;
    report.formula = std::move(name);
    report.subset = subset;
    report.rows.reserve(dataset.items.size());
    double total_error = 0.0;
    std::size_t hits = 0;
    // Sequential reduction in dataset order keeps sums bit-reproducible.
    for (const auto& item : dataset.items) {
        auto row = make_row(item.key, scorer(item), *item.gold);
        total_error += row.abs_error;
        hits += row.success ? 1 : 0;
        report.rows.push_back(std::move(row));
    }
    const auto n = static_cast<double>(report.rows.size());
    report.mae = total_error / n;
    report.success_rate = static_cast<double>(hits) / n;
    report.s_over_e = s_over_e(report.success_rate, report.mae);
    return report;
}

std::vector<EvalReport> evaluate_formulae(const AlignedDataset& dataset, const Lexicon& lexicon,
                                          std::span<const FormulaId> formulas, std::uint64_t seed, Subset subset)
{
    if (formulas.empty()) {
        throw Error("no formulae to evaluate");
    }
    const RandomStream stream{seed};
    std::vector<EvalReport> reports;
    reports.reserve(formulas.size());
    for (const auto id : formulas) {
        auto report = evaluate_scorer(
            dataset, std::string(formula_name(id)),
            [&](const AlignedItem& item) { return prior_polarity(id, item.key, lexicon.find(item.key), stream); },
            subset);
        for (const auto& item : dataset.items) {
            if (const auto* senses = lexicon.find(item.key); senses && hits_tie_policy(id, *senses, stream)) {
                ++report.tie_count;
            }
        }
        reports.push_back(std::move(report));
    }
    sort_reports(reports);
    return reports;
}

void sort_reports(std::vector<EvalReport>& reports)
{
    static constexpr auto inf = std::numeric_limits<double>::infinity();
    std::stable_sort(reports.begin(), reports.end(), [](const EvalReport& lhs, const EvalReport& rhs) {
        const double a = lhs.s_over_e.value_or(inf);
        const double b = rhs.s_over_e.value_or(inf);
        if (a != b) {
            return a > b;
        }
        return lhs.formula < rhs.formula;
    });
}

}  // namespace priorpol
