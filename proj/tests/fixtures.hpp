#pragma once

// Shared test helpers: fixture paths and random generators.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "priorpol/alignment.hpp"
#include "priorpol/gold.hpp"
#include "priorpol/lexicon.hpp"

inline std::string fixture_path(const std::string& name)
{
    return std::string(PRIORPOL_FIXTURES) + "/" + name;
}

// A score pair with pos + neg <= 1. Half the time on the 1/8 grid SWN uses,
// which makes exact ties between aggregates common.
inline priorpol::SenseScore random_score(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 0) {
        std::uniform_int_distribution<int> eighths(0, 8);
        const int p = eighths(rng);
        std::uniform_int_distribution<int> rest(0, 8 - p);
        return {p / 8.0, rest(rng) / 8.0};
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    return {p, unit(rng) * (1.0 - p)};
}

inline priorpol::SenseList random_sense_list(std::mt19937_64& rng, std::size_t max_senses = 8)
{
    std::uniform_int_distribution<std::size_t> count(1, max_senses);
    priorpol::SenseList list;
    list.key = priorpol::LemmaKey{"w" + std::to_string(rng() % 1000000), priorpol::PartOfSpeech::noun};
    const auto n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        list.scores.push_back(random_score(rng));
    }
    return list;
}

struct RandomSwn {
    std::string text;
    std::size_t term_tokens{0};
};

inline RandomSwn random_swn_text(std::mt19937_64& rng, std::size_t lemmas)
{
    RandomSwn out;
    out.text = "# POS\tID\tPosScore\tNegScore\tSynsetTerms\tGloss\n";
    std::uniform_int_distribution<std::size_t> senses(1, 6);
    std::uniform_int_distribution<int> pos_pick(0, 3);
    std::uniform_int_distribution<int> extra(0, 4);
    constexpr char tags[] = {'n', 'v', 'a', 'r'};
    std::size_t offset = 0;
    std::size_t synonym = 0;
    for (std::size_t l = 0; l < lemmas; ++l) {
        const char tag = tags[pos_pick(rng)];
        const auto n = senses(rng);
        for (std::size_t r = 1; r <= n; ++r) {
            const auto score = random_score(rng);
            out.text += std::string(1, tag) + '\t' + std::to_string(++offset) + '\t' + fmt::format("{}", score.pos) + '\t' +
                        fmt::format("{}", score.neg) + "\tlemma" + std::to_string(l) + '#' + std::to_string(r);
            ++out.term_tokens;
            if (extra(rng) == 0) {
                out.text += " syn" + std::to_string(synonym++) + "#1";
                ++out.term_tokens;
            }
            out.text += "\tgloss text\n";
        }
    }
    return out;
}

// Dataset whose items all map onto `key` entries of a synthetic lexicon with
// one sense each; gold values given per item.
struct SyntheticData {
    priorpol::Lexicon lexicon;
    priorpol::AlignedDataset dataset;
};

inline SyntheticData synthetic_data(const std::vector<priorpol::GoldEntry>& gold,
                                    const std::vector<priorpol::SenseScore>& senses)
{
    priorpol::LexiconBuilder builder;
    SyntheticData data;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        priorpol::SenseEntry entry;
        entry.pos = priorpol::PartOfSpeech::noun;
        entry.offset = std::to_string(i + 1);
        entry.pos_score = senses[i].pos;
        entry.neg_score = senses[i].neg;
        entry.terms.push_back({gold[i].word, 1});
        builder.add(entry);
    }
    data.lexicon = std::move(builder).build();
    data.dataset = priorpol::align(gold, data.lexicon);
    return data;
}
