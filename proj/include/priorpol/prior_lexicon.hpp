#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "priorpol/formulae.hpp"
#include "priorpol/lexicon.hpp"

namespace priorpol {

struct PriorRow {
    LemmaKey key;
    double score{0.0};
};

// One row per lemma#pos, sorted by rendered key.
[[nodiscard]] std::vector<PriorRow> prior_lexicon(const Lexicon& lexicon, FormulaId formula, const RandomStream& stream);

// Writes `lemma#pos<TAB>score` lines, score with 6 decimals, LF endings.
void export_prior_lexicon(const Lexicon& lexicon, FormulaId formula, std::uint64_t seed, std::ostream& out);

}  // namespace priorpol
