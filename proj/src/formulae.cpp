#include "priorpol/formulae.hpp"

#include <cmath>

#include "priorpol/error.hpp"

namespace priorpol {

namespace {

constexpr std::array<std::string_view, 14> kFormulaNames{"rnd",     "swrnd_m", "swrnd_d", "fs_m", "fs_d",
                                                         "mean_m",  "mean_d",  "senti_m", "senti_d", "uni",
                                                         "w1_m",    "w1_d",    "w2_m",    "w2_d"};

constexpr std::array<std::string_view, 8> kFamilyNames{"fs", "mean", "senti", "uni", "w1", "w2", "swrnd", "rnd"};

void require_senses(const SenseList& senses)
{
    if (senses.scores.empty()) {
        throw Error("no senses for " + senses.key.str());
    }
}

void count_nonzero(const SenseList& senses, AggregateScore& agg)
{
    for (const auto& s : senses.scores) {
        agg.num_pos += s.pos > 0.0 ? 1 : 0;
        agg.num_neg += s.neg > 0.0 ? 1 : 0;
    }
    const auto n = static_cast<double>(senses.size());
    agg.pos_weight = static_cast<double>(agg.num_pos) / n;
    agg.neg_weight = static_cast<double>(agg.num_neg) / n;
}

template <typename Weight>
AggregateScore weighted_over_n(const SenseList& senses, Weight weight)
{
    require_senses(senses);
    AggregateScore agg;
    for (std::size_t i = 0; i < senses.size(); ++i) {
        const double w = weight(i + 1);
        agg.pos += w * senses.scores[i].pos;
        agg.neg += w * senses.scores[i].neg;
    }
    const auto n = static_cast<double>(senses.size());
    agg.pos /= n;
    agg.neg /= n;
    count_nonzero(senses, agg);
    return agg;
}

}  // namespace

std::string_view formula_name(FormulaId id) noexcept
{
    return kFormulaNames[static_cast<std::size_t>(id)];
}

std::optional<FormulaId> parse_formula(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < kFormulaNames.size(); ++i) {
        if (kFormulaNames[i] == name) {
            return static_cast<FormulaId>(i);
        }
    }
    return std::nullopt;
}

std::string_view family_name(Family family) noexcept
{
    return kFamilyNames[static_cast<std::size_t>(family)];
}

std::optional<Family> parse_family(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
        if (kFamilyNames[i] == name) {
            return static_cast<Family>(i);
        }
    }
    return std::nullopt;
}

Family family_of(FormulaId id) noexcept
{
    switch (id) {
    case FormulaId::rnd: return Family::rnd;
    case FormulaId::swrnd_m:
    case FormulaId::swrnd_d: return Family::swrnd;
    case FormulaId::fs_m:
    case FormulaId::fs_d: return Family::fs;
    case FormulaId::mean_m:
    case FormulaId::mean_d: return Family::mean;
    case FormulaId::senti_m:
    case FormulaId::senti_d: return Family::senti;
    case FormulaId::uni: return Family::uni;
    case FormulaId::w1_m:
    case FormulaId::w1_d: return Family::w1;
    case FormulaId::w2_m:
    case FormulaId::w2_d: return Family::w2;
    }
    return Family::rnd;
}

std::optional<Combiner> combiner_of(FormulaId id) noexcept
{
    switch (id) {
    case FormulaId::rnd:
    case FormulaId::uni: return std::nullopt;
    case FormulaId::swrnd_m:
    case FormulaId::fs_m:
    case FormulaId::mean_m:
    case FormulaId::senti_m:
    case FormulaId::w1_m:
    case FormulaId::w2_m: return Combiner::max;
    default: return Combiner::diff;
    }
}

FormulaId representative(Family family) noexcept
{
    switch (family) {
    case Family::fs: return FormulaId::fs_d;
    case Family::mean: return FormulaId::mean_d;
    case Family::senti: return FormulaId::senti_d;
    case Family::uni: return FormulaId::uni;
    case Family::w1: return FormulaId::w1_d;
    case Family::w2: return FormulaId::w2_d;
    case Family::swrnd: return FormulaId::swrnd_d;
    case Family::rnd: return FormulaId::rnd;
    }
    return FormulaId::rnd;
}

double combine_max(const AggregateScore& agg) noexcept
{
    return agg.neg > agg.pos ? -agg.neg : agg.pos;
}

double combine_diff(const AggregateScore& agg) noexcept
{
    return agg.pos - agg.neg;
}

double combine(const AggregateScore& agg, Combiner mode) noexcept
{
    return mode == Combiner::max ? combine_max(agg) : combine_diff(agg);
}

AggregateScore aggregate_fs(const SenseList& senses)
{
    return aggregate_single(senses, 1);
}

AggregateScore aggregate_single(const SenseList& senses, std::size_t rank)
{
    require_senses(senses);
    const auto& chosen = senses.rank(rank);
    AggregateScore agg;
    agg.pos = chosen.pos;
    agg.neg = chosen.neg;
    count_nonzero(senses, agg);
    return agg;
}

AggregateScore aggregate_mean(const SenseList& senses)
{
    return weighted_over_n(senses, [](std::size_t) { return 1.0; });
}

AggregateScore aggregate_senti(const SenseList& senses)
{
    require_senses(senses);
    AggregateScore agg;
    for (const auto& s : senses.scores) {
        agg.pos += s.pos;
        agg.neg += s.neg;
    }
    count_nonzero(senses, agg);
    agg.pos = agg.num_pos == 0 ? 0.0 : agg.pos / static_cast<double>(agg.num_pos);
    agg.neg = agg.num_neg == 0 ? 0.0 : agg.neg / static_cast<double>(agg.num_neg);
    return agg;
}

AggregateScore aggregate_w1(const SenseList& senses)
{
    return weighted_over_n(senses, [](std::size_t rank) { return std::ldexp(1.0, -static_cast<int>(rank - 1)); });
}

AggregateScore aggregate_w2(const SenseList& senses)
{
    return weighted_over_n(senses, [](std::size_t rank) { return 1.0 / static_cast<double>(rank); });
}

double score_uni(const SenseList& senses)
{
    const auto agg = aggregate_senti(senses);
    if (agg.pos > agg.neg) {
        return agg.pos;
    }
    if (agg.neg > agg.pos) {
        return -agg.neg;
    }
    return agg.neg_weight > agg.pos_weight ? -agg.neg : agg.pos;
}

double score_rnd(const LemmaKey& key, const RandomStream& stream)
{
    auto engine = stream.substream("rnd", key.str());
    return 2.0 * uniform_unit(engine) - 1.0;
}

std::size_t swrnd_rank(const LemmaKey& key, std::size_t n, const RandomStream& stream)
{
    auto engine = stream.substream("swrnd", key.str());
    return static_cast<std::size_t>(uniform_index(engine, n)) + 1;
}

double score_swrnd(const SenseList& senses, const LemmaKey& key, const RandomStream& stream, Combiner mode)
{
    require_senses(senses);
    return combine(aggregate_single(senses, swrnd_rank(key, senses.size(), stream)), mode);
}

AggregateScore aggregate(Family family, const SenseList& senses)
{
    switch (family) {
    case Family::fs: return aggregate_fs(senses);
    case Family::mean: return aggregate_mean(senses);
    case Family::senti:
    case Family::uni: return aggregate_senti(senses);
    case Family::w1: return aggregate_w1(senses);
    case Family::w2: return aggregate_w2(senses);
    case Family::swrnd:
    case Family::rnd: break;
    }
    throw Error("family " + std::string(family_name(family)) + " has no deterministic aggregate");
}

double prior_polarity(FormulaId id, const LemmaKey& key, const SenseList* senses, const RandomStream& stream)
{
    if (id == FormulaId::rnd) {
        return score_rnd(key, stream);
    }
    if (senses == nullptr) {
        throw Error("no senses for " + key.str());
    }
    if (id == FormulaId::uni) {
        return score_uni(*senses);
    }
    const auto mode = *combiner_of(id);
    const auto family = family_of(id);
    if (family == Family::swrnd) {
        return score_swrnd(*senses, key, stream, mode);
    }
    return combine(aggregate(family, *senses), mode);
}

double prior_polarity(FormulaId id, const SenseList& senses, const RandomStream& stream)
{
    return prior_polarity(id, senses.key, &senses, stream);
}

bool hits_tie_policy(FormulaId id, const SenseList& senses, const RandomStream& stream)
{
    if (id == FormulaId::rnd || senses.scores.empty()) {
        return false;
    }
    if (id == FormulaId::uni) {
        const auto agg = aggregate_senti(senses);
        return agg.pos == agg.neg && agg.pos != 0.0 && agg.pos_weight == agg.neg_weight;
    }
    if (combiner_of(id) != Combiner::max) {
        return false;
    }
    const auto family = family_of(id);
    const auto agg = family == Family::swrnd
                         ? aggregate_single(senses, swrnd_rank(senses.key, senses.size(), stream))
                         : aggregate(family, senses);
    return agg.pos == agg.neg && agg.pos != 0.0;
}

}  // namespace priorpol
