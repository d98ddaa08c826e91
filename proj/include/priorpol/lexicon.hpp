#pragma once

// SentiWordNet-format sense lexicon: parsing, lookup and export.

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace priorpol {

enum class PartOfSpeech : char { noun = 'n', verb = 'v', adjective = 'a', adverb = 'r' };

// Canonical PoS ordering used for deterministic output.
inline constexpr std::array<PartOfSpeech, 4> kPartsOfSpeech{
    PartOfSpeech::noun, PartOfSpeech::verb, PartOfSpeech::adjective, PartOfSpeech::adverb};

[[nodiscard]] char to_char(PartOfSpeech pos) noexcept;

// Accepts n, v, a, r and the adjective satellite s (folded into a).
[[nodiscard]] std::optional<PartOfSpeech> parse_pos(std::string_view tag) noexcept;

[[nodiscard]] std::string to_lower(std::string_view text);

struct LemmaKey {
    std::string lemma;  // lowercase
    PartOfSpeech pos{PartOfSpeech::noun};

    LemmaKey() = default;
    LemmaKey(std::string_view lemma_text, PartOfSpeech part);

    // `lemma#pos`, e.g. cold#a
    [[nodiscard]] std::string str() const;

    // Orders by rendered form so map iteration matches sorted export rows.
    friend std::strong_ordering operator<=>(const LemmaKey& lhs, const LemmaKey& rhs);
    friend bool operator==(const LemmaKey& lhs, const LemmaKey& rhs) = default;
};

// Parses `lemma#pos`; returns nullopt on malformed input.
[[nodiscard]] std::optional<LemmaKey> parse_lemma_key(std::string_view text);

struct SenseScore {
    double pos{0.0};
    double neg{0.0};

    friend bool operator==(const SenseScore&, const SenseScore&) = default;
};

struct SenseTerm {
    std::string lemma;
    int rank{1};
};

// One synset row of the source file.
struct SenseEntry {
    PartOfSpeech pos{PartOfSpeech::noun};
    bool satellite{false};  // source tag was `s`
    std::string offset;
    double pos_score{0.0};
    double neg_score{0.0};
    std::vector<SenseTerm> terms;
};

// Scores of one lemma#pos ordered by sense rank; scores[0] is rank 1.
struct SenseList {
    LemmaKey key;
    std::vector<SenseScore> scores;

    [[nodiscard]] std::size_t size() const noexcept { return scores.size(); }
    [[nodiscard]] const SenseScore& rank(std::size_t r) const { return scores.at(r - 1); }
    [[nodiscard]] bool all_zero() const noexcept;

    friend bool operator==(const SenseList&, const SenseList&) = default;
};

class LexiconBuilder;

// Immutable index lemma#pos -> SenseList.
class Lexicon {
public:
    Lexicon() = default;

    // Lookup lowercases the lemma. Absence is a value.
    [[nodiscard]] const SenseList* find(const LemmaKey& key) const;
    [[nodiscard]] std::optional<SenseList> lookup(const LemmaKey& key) const;

    // True if the lemma appears under any PoS.
    [[nodiscard]] bool has_lemma(std::string_view lemma) const;
    // PoS under which the lemma appears, in n, v, a, r order.
    [[nodiscard]] std::vector<PartOfSpeech> parts_of_speech(std::string_view lemma) const;

    [[nodiscard]] std::size_t entry_count() const noexcept { return entry_count_; }
    [[nodiscard]] std::size_t lemma_pos_count() const noexcept { return index_.size(); }
    // Total (key, rank) pairs.
    [[nodiscard]] std::size_t sense_count() const noexcept;

    [[nodiscard]] const std::map<LemmaKey, SenseList>& entries() const noexcept { return index_; }

    friend bool operator==(const Lexicon& lhs, const Lexicon& rhs) { return lhs.index_ == rhs.index_; }

private:
    friend class LexiconBuilder;

    std::map<LemmaKey, SenseList> index_;
    std::size_t entry_count_{0};
};

// Collects synset rows and validates rank structure on build().
//
// Ranks are checked per (lemma, source tag): a duplicate is an error. After
// `s` is folded into `a`, a key whose merged ranks collide is re-ranked by
// (rank, file order). Otherwise ranks must be exactly 1..n.
class LexiconBuilder {
public:
    void add(const SenseEntry& entry);
    [[nodiscard]] Lexicon build() &&;

private:
    struct Pending {
        int rank;
        bool satellite;
        std::size_t order;
        SenseScore score;
    };

    std::map<LemmaKey, std::vector<Pending>> pending_;
    std::size_t entry_count_{0};
    std::size_t order_{0};
};

struct ParseOptions {
    bool strict{true};
    // Lenient-mode warnings go here when non-null.
    std::ostream* diagnostics{nullptr};
};

inline constexpr double kScoreSumTolerance = 1e-9;

// Parses one data line; throws ParseError (carrying `line_number`).
[[nodiscard]] SenseEntry parse_swn_line(std::string_view line, std::size_t line_number);

[[nodiscard]] Lexicon parse_swn(std::istream& source, const ParseOptions& options = {});
[[nodiscard]] Lexicon load_swn(const std::string& path, const ParseOptions& options = {});

// Writes every sense back out in SWN layout, one line per (key, rank), with
// synthetic offsets. parse_swn over the output reproduces an equal Lexicon.
void export_senses(const Lexicon& lexicon, std::ostream& out);

// Score formatting shared by all lexicon exports: fixed 6 decimals, no "-0".
[[nodiscard]] std::string format_score(double score);

}  // namespace priorpol
