#include "priorpol/alignment.hpp"

#include <optional>
#include <unordered_set>

namespace priorpol {

AlignedDataset align(const std::vector<GoldEntry>& gold, const Lexicon& lexicon, const ExceptionTable& exceptions)
{
    AlignedDataset dataset;
    dataset.source_word_count = gold.size();

    // Words present verbatim claim their lemma before any lemmatized word can.
    std::unordered_set<std::string> claimed;
    for (const auto& entry : gold) {
        if (lexicon.has_lemma(entry.word)) {
            claimed.insert(entry.word);
        }
    }

    for (const auto& entry : gold) {
        std::string lemma;
        std::string source;
        if (lexicon.has_lemma(entry.word)) {
            lemma = entry.word;
            source = "exact";
        } else {
            const auto candidates = lemmatize(entry.word, lexicon, exceptions);
            if (candidates.empty()) {
                dataset.dropped.push_back({entry.word, kDropNoLemma});
                continue;
            }
            lemma = candidates.front();
            if (!claimed.insert(lemma).second) {
                dataset.dropped.push_back({entry.word, kDropDuplicateLemma});
                continue;
            }
            source = "lemmatized";
        }

        ++dataset.lemma_count;
        const auto shared = std::make_shared<const GoldEntry>(entry);
        for (const auto pos : lexicon.parts_of_speech(lemma)) {
            dataset.items.push_back(AlignedItem{LemmaKey{lemma, pos}, shared, source});
        }
    }
    return dataset;
}

}  // namespace priorpol
