#include "priorpol/classification.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "priorpol/error.hpp"

namespace priorpol {

namespace {

std::size_t index_of(Label label)
{
    return static_cast<std::size_t>(label);
}

double ratio(std::size_t num, std::size_t den)
{
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::string_view label_name(Label label) noexcept
{
    switch (label) {
    case Label::positive: return "pos";
    case Label::negative: return "neg";
    case Label::tie: return "tie";
    }
    return "tie";
}

Label label_of(double score) noexcept
{
    if (score > 0.0) {
        return Label::positive;
    }
    if (score < 0.0) {
        return Label::negative;
    }
    return Label::tie;
}

Classified classify_word(double score, double gold_mu)
{
    if (gold_mu == 0.0) {
        throw Error("gold mean 0 has no sign; exclude midpoint words before classifying");
    }
    return Classified{label_of(score), gold_mu > 0.0 ? Label::positive : Label::negative};
}

Label committee_vote(std::span<const Label> votes)
{
    if (votes.size() != kCommitteeFamilies.size()) {
        throw Error(fmt::format("committee expects {} votes, got {}", kCommitteeFamilies.size(), votes.size()));
    }
    const auto pos = std::count(votes.begin(), votes.end(), Label::positive);
    const auto neg = std::count(votes.begin(), votes.end(), Label::negative);
    return neg > pos ? Label::negative : Label::positive;
}

std::string_view class_metric_name(ClassMetric metric) noexcept
{
    switch (metric) {
    case ClassMetric::f1: return "f1";
    case ClassMetric::precision: return "precision";
    case ClassMetric::recall: return "recall";
    case ClassMetric::accuracy: return "accuracy";
    }
    return "f1";
}

std::optional<ClassMetric> parse_class_metric(std::string_view name) noexcept
{
    for (const auto metric : {ClassMetric::f1, ClassMetric::precision, ClassMetric::recall, ClassMetric::accuracy}) {
        if (class_metric_name(metric) == name) {
            return metric;
        }
    }
    return std::nullopt;
}

ClassReport classification_report(std::span<const Label> predicted, std::span<const Label> actual, std::string name)
{
    if (predicted.size() != actual.size()) {
        throw Error("prediction and gold lists differ in length");
    }
    if (actual.empty()) {
        throw Error("classification report over no items");
    }
    ClassReport report;
    report.name = std::move(name);
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == Label::tie) {
            throw Error("gold label must be positive or negative");
        }
        ++report.confusion[index_of(actual[i])][index_of(predicted[i])];
    }

    for (const auto cls : {Label::positive, Label::negative}) {
        const auto c = index_of(cls);
        const auto& row = report.confusion[c];
        const std::size_t actual_total = row[0] + row[1] + row[2];
        if (actual_total == 0) {
            throw Error(fmt::format("degenerate gold: no {} items, recall undefined", label_name(cls)));
        }
        const std::size_t tp = row[c];
        const std::size_t predicted_total = report.confusion[0][c] + report.confusion[1][c];
        auto& m = report.per_class[c];
        m.precision = ratio(tp, predicted_total);
        m.recall = ratio(tp, actual_total);
        m.f1 = (m.precision + m.recall) > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    }
    report.precision = 0.5 * (report.per_class[0].precision + report.per_class[1].precision);
    report.recall = 0.5 * (report.per_class[0].recall + report.per_class[1].recall);
    report.f1 = 0.5 * (report.per_class[0].f1 + report.per_class[1].f1);
    return report;
}

ClassReport classification_report(std::span<const Classified> rows, std::string name)
{
    std::vector<Label> predicted;
    std::vector<Label> actual;
    predicted.reserve(rows.size());
    actual.reserve(rows.size());
    for (const auto& r : rows) {
        predicted.push_back(r.predicted);
        actual.push_back(r.actual);
    }
    return classification_report(predicted, actual, std::move(name));
}

double accuracy(std::span<const Label> predicted, std::span<const Label> actual)
{
    if (predicted.size() != actual.size() || actual.empty()) {
        throw Error("accuracy needs equal, non-empty label lists");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        hits += predicted[i] == actual[i] ? 1 : 0;
    }
    return ratio(hits, actual.size());
}

double metric_value(const ClassReport& report, ClassMetric metric)
{
    switch (metric) {
    case ClassMetric::f1: return report.f1;
    case ClassMetric::precision: return report.precision;
    case ClassMetric::recall: return report.recall;
    case ClassMetric::accuracy: {
        const auto& c = report.confusion;
        const std::size_t total = c[0][0] + c[0][1] + c[0][2] + c[1][0] + c[1][1] + c[1][2];
        return ratio(c[0][0] + c[1][1], total);
    }
    }
    return report.f1;
}

const ClassSystem& ClassificationRun::system(std::string_view name) const
{
    const auto it = std::find_if(systems.begin(), systems.end(), [&](const ClassSystem& s) { return s.name == name; });
    if (it == systems.end()) {
        throw Error("unknown classification system '" + std::string(name) + "'");
    }
    return *it;
}

ClassSystem classify_formula(const AlignedDataset& dataset, const Lexicon& lexicon, FormulaId id, std::uint64_t seed)
{
    const RandomStream stream{seed};
    ClassSystem system{std::string(formula_name(id)), {}};
    for (const auto& item : dataset.items) {
        if (item.gold->valence_mu == 0.0) {
            continue;
        }
        system.predictions.push_back(label_of(prior_polarity(id, item.key, lexicon.find(item.key), stream)));
    }
    return system;
}

ClassificationRun classify_dataset(const AlignedDataset& dataset, const Lexicon& lexicon, std::uint64_t seed)
{
    ClassificationRun run;
    for (const auto& item : dataset.items) {
        if (item.gold->valence_mu != 0.0) {
            run.keys.push_back(item.key);
            run.gold.push_back(item.gold->valence_mu > 0.0 ? Label::positive : Label::negative);
        }
    }
    for (const auto family : kAllFamilies) {
        auto system = classify_formula(dataset, lexicon, representative(family), seed);
        system.name = std::string(family_name(family));
        run.systems.push_back(std::move(system));
    }

    ClassSystem committee{std::string(kCommitteeName), {}};
    committee.predictions.reserve(run.keys.size());
    std::array<Label, kCommitteeFamilies.size()> votes{};
    for (std::size_t i = 0; i < run.keys.size(); ++i) {
        for (std::size_t v = 0; v < kCommitteeFamilies.size(); ++v) {
            votes[v] = run.system(family_name(kCommitteeFamilies[v])).predictions[i];
        }
        committee.predictions.push_back(committee_vote(votes));
    }
    run.systems.push_back(std::move(committee));
    return run;
}

std::vector<ClassReport> classification_reports(const ClassificationRun& run)
{
    std::vector<ClassReport> reports;
    reports.reserve(run.systems.size());
    for (const auto& system : run.systems) {
        reports.push_back(classification_report(system.predictions, run.gold, system.name));
    }
    std::stable_sort(reports.begin(), reports.end(), [](const ClassReport& lhs, const ClassReport& rhs) {
        if (lhs.f1 != rhs.f1) {
            return lhs.f1 > rhs.f1;
        }
        return lhs.name < rhs.name;
    });
    return reports;
}

}  // namespace priorpol
