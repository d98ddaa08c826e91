#pragma once

// Prior-polarity formulae: aggregate the per-sense scores of a lemma#pos into
// one (pos, neg) pair, then combine the pair into a single score in [-1, 1].

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "priorpol/lexicon.hpp"
#include "priorpol/random_stream.hpp"

namespace priorpol {

enum class FormulaId {
    rnd,
    swrnd_m,
    swrnd_d,
    fs_m,
    fs_d,
    mean_m,
    mean_d,
    senti_m,
    senti_d,
    uni,
    w1_m,
    w1_d,
    w2_m,
    w2_d,
};

inline constexpr std::array<FormulaId, 14> kAllFormulae{
    FormulaId::rnd,     FormulaId::swrnd_m, FormulaId::swrnd_d, FormulaId::fs_m, FormulaId::fs_d,
    FormulaId::mean_m,  FormulaId::mean_d,  FormulaId::senti_m, FormulaId::senti_d, FormulaId::uni,
    FormulaId::w1_m,    FormulaId::w1_d,    FormulaId::w2_m,    FormulaId::w2_d};

// Formula families as they appear in the classification task; _m/_d collapse.
enum class Family { fs, mean, senti, uni, w1, w2, swrnd, rnd };

inline constexpr std::array<Family, 6> kCommitteeFamilies{Family::fs, Family::mean, Family::senti,
                                                          Family::uni, Family::w1,   Family::w2};
inline constexpr std::array<Family, 8> kAllFamilies{Family::fs, Family::mean, Family::senti, Family::uni,
                                                    Family::w1, Family::w2,   Family::swrnd, Family::rnd};

enum class Combiner { max, diff };

[[nodiscard]] std::string_view formula_name(FormulaId id) noexcept;
[[nodiscard]] std::optional<FormulaId> parse_formula(std::string_view name) noexcept;
[[nodiscard]] std::string_view family_name(Family family) noexcept;
[[nodiscard]] std::optional<Family> parse_family(std::string_view name) noexcept;
[[nodiscard]] Family family_of(FormulaId id) noexcept;
// Combiner of a formula; nullopt for rnd and uni, which have none.
[[nodiscard]] std::optional<Combiner> combiner_of(FormulaId id) noexcept;
// The formula whose label stands for the family in classification: the _d
// variant, so an exact pos = neg aggregate is a tie rather than a sign.
[[nodiscard]] FormulaId representative(Family family) noexcept;

struct AggregateScore {
    double pos{0.0};
    double neg{0.0};  // magnitude
    std::size_t num_pos{0};
    std::size_t num_neg{0};
    double pos_weight{0.0};  // num_pos / n
    double neg_weight{0.0};
};

// Max-magnitude combiner. Ties (pos == neg) return +pos.
[[nodiscard]] double combine_max(const AggregateScore& agg) noexcept;
[[nodiscard]] double combine_diff(const AggregateScore& agg) noexcept;
[[nodiscard]] double combine(const AggregateScore& agg, Combiner mode) noexcept;

// All aggregators require a non-empty sense list.
[[nodiscard]] AggregateScore aggregate_fs(const SenseList& senses);
[[nodiscard]] AggregateScore aggregate_mean(const SenseList& senses);
// Mean over senses with a nonzero score on that side; 0 when there are none.
[[nodiscard]] AggregateScore aggregate_senti(const SenseList& senses);
// Geometric weights 1/2^(i-1), divided by n (not by the weight sum).
[[nodiscard]] AggregateScore aggregate_w1(const SenseList& senses);
// Harmonic weights 1/i, divided by n.
[[nodiscard]] AggregateScore aggregate_w2(const SenseList& senses);
// Aggregate of the single sense at 1-based `rank`.
[[nodiscard]] AggregateScore aggregate_single(const SenseList& senses, std::size_t rank);

// Larger senti mean wins; equal means fall back to the larger weight, and a
// double tie returns +pos.
[[nodiscard]] double score_uni(const SenseList& senses);

// Uniform on [-1, 1) from the key's substream.
[[nodiscard]] double score_rnd(const LemmaKey& key, const RandomStream& stream);

// 1-based sense rank drawn for the key. Depends only on (seed, key, n), so
// swrnd_m and swrnd_d see the same sense.
[[nodiscard]] std::size_t swrnd_rank(const LemmaKey& key, std::size_t n, const RandomStream& stream);
[[nodiscard]] double score_swrnd(const SenseList& senses, const LemmaKey& key, const RandomStream& stream,
                                 Combiner mode);

// Aggregator for the deterministic families (fs, mean, senti, w1, w2).
[[nodiscard]] AggregateScore aggregate(Family family, const SenseList& senses);

// Dispatches to the formula. `senses` may be null only for rnd; otherwise
// throws Error("no senses").
[[nodiscard]] double prior_polarity(FormulaId id, const LemmaKey& key, const SenseList* senses,
                                    const RandomStream& stream);
[[nodiscard]] double prior_polarity(FormulaId id, const SenseList& senses, const RandomStream& stream);

// True when scoring hit a tie policy: pos == neg != 0 under a max combiner,
// or the uni double tie.
[[nodiscard]] bool hits_tie_policy(FormulaId id, const SenseList& senses, const RandomStream& stream);

}  // namespace priorpol
