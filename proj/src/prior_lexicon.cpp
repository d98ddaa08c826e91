#include "priorpol/prior_lexicon.hpp"

#include <ostream>

namespace priorpol {

std::vector<PriorRow> prior_lexicon(const Lexicon& lexicon, FormulaId formula, const RandomStream& stream)
{
    std::vector<PriorRow> rows;
    rows.reserve(lexicon.lemma_pos_count());
    // The index is ordered by rendered key already.
    for (const auto& [key, senses] : lexicon.entries()) {
        rows.push_back(PriorRow{key, prior_polarity(formula, senses, stream)});
    }
    return rows;
}

void export_prior_lexicon(const Lexicon& lexicon, FormulaId formula, std::uint64_t seed, std::ostream& out)
{
    for (const auto& row : prior_lexicon(lexicon, formula, RandomStream{seed})) {
        out << row.key.str() << '\t' << format_score(row.score) << '\n';
    }
}

}  // namespace priorpol
