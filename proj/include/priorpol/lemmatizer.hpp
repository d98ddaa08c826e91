#pragma once

// Rule-based lemmatizer: exception lookup plus WordNet-style suffix
// detachment, with every candidate validated against the lexicon.

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "priorpol/lexicon.hpp"

namespace priorpol {

struct DetachmentRule {
    std::string_view suffix;
    std::string_view replacement;
};

// Applied in this order; nouns, then verbs, then adjectives. Adverbs have none.
[[nodiscard]] std::span<const DetachmentRule> detachment_rules(PartOfSpeech pos) noexcept;

// inflected form -> lemmas, in file order.
class ExceptionTable {
public:
    void add(std::string_view inflected, std::string_view lemma);
    [[nodiscard]] std::span<const std::string> lookup(std::string_view inflected) const;
    [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }

private:
    std::map<std::string, std::vector<std::string>, std::less<>> table_;
};

// Lines `inflected<TAB>lemma`; `#` comments and blank lines are skipped.
[[nodiscard]] ExceptionTable load_exceptions(std::istream& source);
[[nodiscard]] ExceptionTable load_exceptions_file(const std::string& path);

// Raw detachment candidates for `word`, before lexicon validation.
[[nodiscard]] std::vector<std::string> detachment_candidates(std::string_view word);

// Exception hits first, then detachment candidates, keeping only lemmas the
// lexicon knows under any PoS. Duplicates removed, first occurrence wins.
[[nodiscard]] std::vector<std::string> lemmatize(std::string_view word, const Lexicon& lexicon,
                                                 const ExceptionTable& exceptions);

}  // namespace priorpol
