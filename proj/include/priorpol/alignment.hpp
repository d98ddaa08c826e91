#pragma once

// Maps gold words onto lexicon lemma#pos keys.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "priorpol/gold.hpp"
#include "priorpol/lemmatizer.hpp"
#include "priorpol/lexicon.hpp"

namespace priorpol {

struct AlignedItem {
    LemmaKey key;
    // Shared by every PoS expansion of one gold word.
    std::shared_ptr<const GoldEntry> gold;
    std::string lemma_source;  // "exact" or "lemmatized"
};

struct DroppedWord {
    std::string word;
    std::string reason;
};

inline constexpr const char* kDropNoLemma = "no-lemma";
inline constexpr const char* kDropDuplicateLemma = "duplicate-lemma";

struct AlignedDataset {
    std::vector<AlignedItem> items;
    std::vector<DroppedWord> dropped;
    std::size_t source_word_count{0};
    std::size_t lemma_count{0};

    [[nodiscard]] std::size_t lemma_pos_count() const noexcept { return items.size(); }
    [[nodiscard]] bool empty() const noexcept { return items.empty(); }
};

// Words that are lexicon lemmas are used as-is and never lemmatized. Other
// words take the first validated lemmatizer candidate; a candidate already
// claimed by another gold word is dropped as "duplicate-lemma". Each lemma
// expands to one item per PoS in n, v, a, r order; items follow gold order.
[[nodiscard]] AlignedDataset align(const std::vector<GoldEntry>& gold, const Lexicon& lexicon,
                                   const ExceptionTable& exceptions = {});

}  // namespace priorpol
