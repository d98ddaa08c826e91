#include "priorpol/lemmatizer.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>

#include "priorpol/error.hpp"

namespace priorpol {

namespace {

constexpr std::array<DetachmentRule, 8> kNounRules{{
    {"s", ""},
    {"ses", "s"},
    {"xes", "x"},
    {"zes", "z"},
    {"ches", "ch"},
    {"shes", "sh"},
    {"ies", "y"},
    {"men", "man"},
}};

constexpr std::array<DetachmentRule, 8> kVerbRules{{
    {"s", ""},
    {"ies", "y"},
    {"es", "e"},
    {"es", ""},
    {"ed", "e"},
    {"ed", ""},
    {"ing", "e"},
    {"ing", ""},
}};

constexpr std::array<DetachmentRule, 4> kAdjectiveRules{{
    {"er", ""},
    {"est", ""},
    {"er", "e"},
    {"est", "e"},
}};

std::string_view trim(std::string_view text)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    return text.substr(first, text.find_last_not_of(ws) - first + 1);
}

void push_unique(std::vector<std::string>& out, std::string candidate)
{
    if (std::find(out.begin(), out.end(), candidate) == out.end()) {
        out.push_back(std::move(candidate));
    }
}

}  // namespace

std::span<const DetachmentRule> detachment_rules(PartOfSpeech pos) noexcept
{
    switch (pos) {
    case PartOfSpeech::noun: return kNounRules;
    case PartOfSpeech::verb: return kVerbRules;
    case PartOfSpeech::adjective: return kAdjectiveRules;
    case PartOfSpeech::adverb: return {};
    }
    return {};
}

void ExceptionTable::add(std::string_view inflected, std::string_view lemma)
{
    auto& lemmas = table_[to_lower(inflected)];
    auto lowered = to_lower(lemma);
    if (std::find(lemmas.begin(), lemmas.end(), lowered) == lemmas.end()) {
        lemmas.push_back(std::move(lowered));
    }
}

std::span<const std::string> ExceptionTable::lookup(std::string_view inflected) const
{
    const auto it = table_.find(inflected);
    if (it == table_.end()) {
        return {};
    }
    return it->second;
}

ExceptionTable load_exceptions(std::istream& source)
{
    ExceptionTable table;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(source, line)) {
        ++line_number;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        const auto tab = content.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError("expected `inflected<TAB>lemma`", line_number);
        }
        const auto inflected = trim(content.substr(0, tab));
        const auto lemma = trim(content.substr(tab + 1));
        if (inflected.empty() || lemma.empty() || lemma.find('\t') != std::string_view::npos) {
            throw ParseError("expected `inflected<TAB>lemma`", line_number);
        }
        table.add(inflected, lemma);
    }
    return table;
}

ExceptionTable load_exceptions_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open exception file '" + path + "'");
    }
    return load_exceptions(in);
}

std::vector<std::string> detachment_candidates(std::string_view word)
{
    std::vector<std::string> candidates;
    for (const auto pos : kPartsOfSpeech) {
        for (const auto& rule : detachment_rules(pos)) {
            if (word.size() > rule.suffix.size() && word.ends_with(rule.suffix)) {
                std::string base(word.substr(0, word.size() - rule.suffix.size()));
                base += rule.replacement;
                push_unique(candidates, std::move(base));
            }
        }
    }
    return candidates;
}

std::vector<std::string> lemmatize(std::string_view word, const Lexicon& lexicon, const ExceptionTable& exceptions)
{
    std::vector<std::string> found;
    for (const auto& lemma : exceptions.lookup(word)) {
        if (lexicon.has_lemma(lemma)) {
            push_unique(found, lemma);
        }
    }
    for (auto& candidate : detachment_candidates(word)) {
        if (lexicon.has_lemma(candidate)) {
            push_unique(found, std::move(candidate));
        }
    }
    return found;
}

}  // namespace priorpol
