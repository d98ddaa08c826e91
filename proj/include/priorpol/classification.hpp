#pragma once

// Binary positive/negative classification of gold words and the majority-vote
// committee over the deterministic formula families.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "priorpol/alignment.hpp"
#include "priorpol/formulae.hpp"
#include "priorpol/lexicon.hpp"

namespace priorpol {

enum class Label : std::uint8_t { positive = 0, negative = 1, tie = 2 };

[[nodiscard]] std::string_view label_name(Label label) noexcept;
[[nodiscard]] Label label_of(double score) noexcept;

struct Classified {
    Label predicted;
    Label actual;

    [[nodiscard]] bool correct() const noexcept { return predicted == actual; }
};

// Throws Error when gold_mu == 0; midpoint words carry no gold sign.
[[nodiscard]] Classified classify_word(double score, double gold_mu);

// Majority over non-tie votes of exactly six voters; an even split, including
// all ties, goes to positive.
[[nodiscard]] Label committee_vote(std::span<const Label> votes);

struct ClassMetrics {
    double precision{0.0};
    double recall{0.0};
    double f1{0.0};
};

struct ClassReport {
    std::string name;
    double precision{0.0};  // macro over {positive, negative}
    double recall{0.0};
    double f1{0.0};
    std::array<ClassMetrics, 2> per_class{};
    // confusion[actual][predicted]; actual in {positive, negative},
    // predicted in {positive, negative, tie}.
    std::array<std::array<std::size_t, 3>, 2> confusion{};
};

enum class ClassMetric { f1, precision, recall, accuracy };

[[nodiscard]] std::string_view class_metric_name(ClassMetric metric) noexcept;
[[nodiscard]] std::optional<ClassMetric> parse_class_metric(std::string_view name) noexcept;

// Precision with no predictions for a class is 0, as is F1 when P + R = 0.
// Throws Error when empty, when lengths differ, when an actual is a tie, or
// when either class is missing from the actuals.
[[nodiscard]] ClassReport classification_report(std::span<const Label> predicted, std::span<const Label> actual,
                                                std::string name = {});
[[nodiscard]] ClassReport classification_report(std::span<const Classified> rows, std::string name = {});

[[nodiscard]] double metric_value(const ClassReport& report, ClassMetric metric);
[[nodiscard]] double accuracy(std::span<const Label> predicted, std::span<const Label> actual);

inline constexpr std::string_view kCommitteeName = "cc";

struct ClassSystem {
    std::string name;
    std::vector<Label> predictions;
};

// Per-word labels for every family plus the committee over the items whose
// gold mean is nonzero.
struct ClassificationRun {
    std::vector<LemmaKey> keys;
    std::vector<Label> gold;
    std::vector<ClassSystem> systems;

    [[nodiscard]] const ClassSystem& system(std::string_view name) const;
};

[[nodiscard]] ClassificationRun classify_dataset(const AlignedDataset& dataset, const Lexicon& lexicon,
                                                 std::uint64_t seed);

// Labels of a single formula over the run's items (the _m tie policy applies).
[[nodiscard]] ClassSystem classify_formula(const AlignedDataset& dataset, const Lexicon& lexicon, FormulaId id,
                                           std::uint64_t seed);

// One report per system, sorted by F1 descending then name.
[[nodiscard]] std::vector<ClassReport> classification_reports(const ClassificationRun& run);

}  // namespace priorpol
