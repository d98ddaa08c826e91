#include "priorpol/gold.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <unordered_set>

#include <fmt/format.h>

#include "priorpol/error.hpp"
#include "priorpol/lexicon.hpp"

namespace priorpol {

namespace {

std::string_view trim(std::string_view text)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = text.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    return text.substr(first, text.find_last_not_of(ws) - first + 1);
}

double parse_number(std::string_view field, std::string_view column, std::size_t line)
{
    field = trim(field);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(fmt::format("non-numeric {} '{}'", column, field), line);
    }
    return value;
}

}  // namespace

GoldEntry make_gold_entry(std::string_view word, double raw_mu, double raw_sigma)
{
    return GoldEntry{to_lower(word), (raw_mu - kScaleMid) / kScaleHalfWidth, raw_sigma / kScaleHalfWidth, raw_mu,
                     raw_sigma};
}

std::vector<std::string> split_csv_record(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r' && c != '\n') {
            fields.back() += c;
        }
    }
    return fields;
}

std::vector<GoldEntry> load_gold(std::istream& source)
{
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(source, line)) {
        ++line_number;
        if (!trim(line).empty()) {
            break;
        }
    }
    if (trim(line).empty()) {
        throw ParseError("missing header row", line_number);
    }

    std::optional<std::size_t> word_col;
    std::optional<std::size_t> mean_col;
    std::optional<std::size_t> sd_col;
    const auto header = split_csv_record(line);
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto name = to_lower(trim(header[i]));
        if (name == "word") {
            word_col = i;
        } else if (name == "valence_mean") {
            mean_col = i;
        } else if (name == "valence_sd") {
            sd_col = i;
        }
    }
    for (const auto& [col, name] : {std::pair{word_col, "word"}, {mean_col, "valence_mean"}, {sd_col, "valence_sd"}}) {
        if (!col) {
            throw ParseError(fmt::format("missing column '{}'", name), line_number);
        }
    }
    const auto needed = std::max({*word_col, *mean_col, *sd_col}) + 1;

    std::vector<GoldEntry> entries;
    std::unordered_set<std::string> seen;
    while (std::getline(source, line)) {
        ++line_number;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv_record(line);
        if (fields.size() < needed) {
            throw ParseError(fmt::format("expected at least {} columns, found {}", needed, fields.size()), line_number);
        }
        const auto word = trim(fields[*word_col]);
        if (word.empty()) {
            throw ParseError("empty word", line_number);
        }
        const double raw_mu = parse_number(fields[*mean_col], "valence_mean", line_number);
        const double raw_sigma = parse_number(fields[*sd_col], "valence_sd", line_number);
        if (!(raw_mu >= kScaleMin && raw_mu <= kScaleMax)) {
            throw ParseError(fmt::format("valence_mean {} outside [1, 9]", raw_mu), line_number);
        }
        if (!(raw_sigma >= 0.0)) {
            throw ParseError(fmt::format("negative valence_sd {}", raw_sigma), line_number);
        }
        auto entry = make_gold_entry(word, raw_mu, raw_sigma);
        if (!seen.insert(entry.word).second) {
            throw ParseError(fmt::format("duplicate word '{}'", entry.word), line_number);
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<GoldEntry> load_gold_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open gold file '" + path + "'");
    }
    return load_gold(in);
}

}  // namespace priorpol
