#include "priorpol/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "priorpol/error.hpp"

namespace priorpol {

namespace {

std::string_view trim(std::string_view text)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(ws);
    return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(sep, start);
        if (end == std::string_view::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, end - start));
        start = end + 1;
    }
}

double parse_score(std::string_view field, const char* name, std::size_t line)
{
    field = trim(field);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(fmt::format("non-numeric {} '{}'", name, field), line);
    }
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ParseError(fmt::format("score out of range: {} = {}", name, field), line);
    }
    return value;
}

SenseTerm parse_term(std::string_view token, std::size_t line)
{
    const auto hash = token.rfind('#');
    if (hash == std::string_view::npos || hash == 0 || hash + 1 == token.size()) {
        throw ParseError(fmt::format("malformed term token '{}'", token), line);
    }
    const auto digits = token.substr(hash + 1);
    int rank = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || rank < 1) {
        throw ParseError(fmt::format("malformed sense rank in term token '{}'", token), line);
    }
    return SenseTerm{to_lower(token.substr(0, hash)), rank};
}

}  // namespace

char to_char(PartOfSpeech pos) noexcept
{
    return static_cast<char>(pos);
}

std::optional<PartOfSpeech> parse_pos(std::string_view tag) noexcept
{
    if (tag.size() != 1) {
        return std::nullopt;
    }
    switch (tag.front()) {
    case 'n': return PartOfSpeech::noun;
    case 'v': return PartOfSpeech::verb;
    case 'a':
    case 's': return PartOfSpeech::adjective;
    case 'r': return PartOfSpeech::adverb;
    default: return std::nullopt;
    }
}

std::string to_lower(std::string_view text)
{
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
    });
    return out;
}

LemmaKey::LemmaKey(std::string_view lemma_text, PartOfSpeech part) : lemma(to_lower(lemma_text)), pos(part) {}

std::string LemmaKey::str() const
{
    std::string out = lemma;
    out += '#';
    out += to_char(pos);
    return out;
}

std::strong_ordering operator<=>(const LemmaKey& lhs, const LemmaKey& rhs)
{
    // Rendered-form comparison without allocating: lemma bytes, then '#', then tag.
    const std::string_view a = lhs.lemma;
    const std::string_view b = rhs.lemma;
    const auto common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] != b[i]) {
            return static_cast<unsigned char>(a[i]) <=> static_cast<unsigned char>(b[i]);
        }
    }
    if (a.size() != b.size()) {
        const auto next_a = a.size() > common ? static_cast<unsigned char>(a[common]) : static_cast<unsigned char>('#');
        const auto next_b = b.size() > common ? static_cast<unsigned char>(b[common]) : static_cast<unsigned char>('#');
        if (next_a != next_b) {
            return next_a <=> next_b;
        }
        // One lemma continues with a literal '#': fall back to full strings.
        return lhs.str() <=> rhs.str();
    }
    return static_cast<unsigned char>(lhs.pos) <=> static_cast<unsigned char>(rhs.pos);
}

std::optional<LemmaKey> parse_lemma_key(std::string_view text)
{
    const auto hash = text.rfind('#');
    if (hash == std::string_view::npos || hash == 0) {
        return std::nullopt;
    }
    const auto pos = parse_pos(text.substr(hash + 1));
    if (!pos) {
        return std::nullopt;
    }
    return LemmaKey{text.substr(0, hash), *pos};
}

bool SenseList::all_zero() const noexcept
{
    return std::all_of(scores.begin(), scores.end(), [](const SenseScore& s) { return s.pos == 0.0 && s.neg == 0.0; });
}

const SenseList* Lexicon::find(const LemmaKey& key) const
{
    const auto it = index_.find(LemmaKey{key.lemma, key.pos});
    return it == index_.end() ? nullptr : &it->second;
}

std::optional<SenseList> Lexicon::lookup(const LemmaKey& key) const
{
    if (const auto* senses = find(key)) {
        return *senses;
    }
    return std::nullopt;
}

bool Lexicon::has_lemma(std::string_view lemma) const
{
    return !parts_of_speech(lemma).empty();
}

std::vector<PartOfSpeech> Lexicon::parts_of_speech(std::string_view lemma) const
{
    std::vector<PartOfSpeech> found;
    const auto lowered = to_lower(lemma);
    for (const auto pos : kPartsOfSpeech) {
        if (index_.contains(LemmaKey{lowered, pos})) {
            found.push_back(pos);
        }
    }
    return found;
}

std::size_t Lexicon::sense_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& [key, senses] : index_) {
        total += senses.size();
    }
    return total;
}

void LexiconBuilder::add(const SenseEntry& entry)
{
    ++entry_count_;
    for (const auto& term : entry.terms) {
        pending_[LemmaKey{term.lemma, entry.pos}].push_back(
            Pending{term.rank, entry.satellite, order_++, SenseScore{entry.pos_score, entry.neg_score}});
    }
}

Lexicon LexiconBuilder::build() &&
{
    Lexicon lexicon;
    lexicon.entry_count_ = entry_count_;
    for (auto& [key, senses] : pending_) {
        std::set<std::pair<bool, int>> seen_in_tag;
        std::set<int> seen_merged;
        bool collision = false;
        for (const auto& sense : senses) {
            if (!seen_in_tag.insert({sense.satellite, sense.rank}).second) {
                throw ParseError(fmt::format("ambiguous rank: duplicate sense {}#{}", key.str(), sense.rank), 0);
            }
            collision = !seen_merged.insert(sense.rank).second || collision;
        }

        std::sort(senses.begin(), senses.end(), [](const Pending& lhs, const Pending& rhs) {
            return lhs.rank != rhs.rank ? lhs.rank < rhs.rank : lhs.order < rhs.order;
        });
        if (!collision) {
            for (std::size_t i = 0; i < senses.size(); ++i) {
                if (senses[i].rank != static_cast<int>(i) + 1) {
                    throw ParseError(fmt::format("missing sense rank {} for {}", i + 1, key.str()), 0);
                }
            }
        }

        SenseList list{key, {}};
        list.scores.reserve(senses.size());
        for (const auto& sense : senses) {
            list.scores.push_back(sense.score);
        }
        lexicon.index_.emplace(key, std::move(list));
    }
    return lexicon;
}

SenseEntry parse_swn_line(std::string_view line, std::size_t line_number)
{
    const auto fields = split(line, '\t');
    if (fields.size() < 5) {
        throw ParseError(fmt::format("expected at least 5 tab-separated columns, found {}", fields.size()), line_number);
    }

    SenseEntry entry;
    const auto tag = trim(fields[0]);
    const auto pos = parse_pos(tag);
    if (!pos) {
        throw ParseError(fmt::format("unknown PoS tag '{}'", tag), line_number);
    }
    entry.pos = *pos;
    entry.satellite = tag == "s";

    const auto offset = trim(fields[1]);
    if (offset.empty() || !std::all_of(offset.begin(), offset.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(fmt::format("malformed offset '{}'", offset), line_number);
    }
    entry.offset = std::string(offset);
    entry.pos_score = parse_score(fields[2], "PosScore", line_number);
    entry.neg_score = parse_score(fields[3], "NegScore", line_number);

    const auto terms = trim(fields[4]);
    for (const auto token : split(terms, ' ')) {
        if (!token.empty()) {
            entry.terms.push_back(parse_term(token, line_number));
        }
    }
    if (entry.terms.empty()) {
        throw ParseError("empty SynsetTerms column", line_number);
    }
    return entry;
}

Lexicon parse_swn(std::istream& source, const ParseOptions& options)
{
    LexiconBuilder builder;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(source, line)) {
        ++line_number;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }

        SenseEntry entry;
        try {
            entry = parse_swn_line(line, line_number);
        } catch (const ParseError& error) {
            if (options.strict) {
                throw;
            }
            if (options.diagnostics != nullptr) {
                *options.diagnostics << "warning: skipped " << error.what() << '\n';
            }
            continue;
        }

        if (entry.pos_score + entry.neg_score > 1.0 + kScoreSumTolerance) {
            const auto message = fmt::format("PosScore + NegScore = {} exceeds 1", entry.pos_score + entry.neg_score);
            if (options.strict) {
                throw ParseError(message, line_number);
            }
            if (options.diagnostics != nullptr) {
                *options.diagnostics << "warning: line " << line_number << ": " << message << '\n';
            }
        }
        builder.add(entry);
    }
    return std::move(builder).build();
}

Lexicon load_swn(const std::string& path, const ParseOptions& options)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open SentiWordNet file '" + path + "'");
    }
    return parse_swn(in, options);
}

void export_senses(const Lexicon& lexicon, std::ostream& out)
{
    out << "# POS\tID\tPosScore\tNegScore\tSynsetTerms\n";
    std::size_t offset = 0;
    for (const auto& [key, senses] : lexicon.entries()) {
        for (std::size_t i = 0; i < senses.size(); ++i) {
            const auto& score = senses.scores[i];
            // {} gives the shortest representation that round-trips exactly.
            out << fmt::format("{}\t{:08d}\t{}\t{}\t{}#{}\n", to_char(key.pos), ++offset, score.pos, score.neg, key.lemma,
                               i + 1);
        }
    }
}

std::string format_score(double score)
{
    auto text = fmt::format("{:.6f}", score);
    if (text == "-0.000000") {
        text.erase(0, 1);
    }
    return text;
}

}  // namespace priorpol
