#pragma once

// Valence gold standard on the 1-9 SAM scale, rescaled onto [-1, 1].

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace priorpol {

inline constexpr double kScaleMin = 1.0;
inline constexpr double kScaleMid = 5.0;
inline constexpr double kScaleMax = 9.0;
inline constexpr double kScaleHalfWidth = 4.0;

struct GoldEntry {
    std::string word;  // lowercase
    double valence_mu{0.0};
    double valence_sigma{0.0};
    double raw_mu{kScaleMid};
    double raw_sigma{0.0};
};

// (raw - 5) / 4 and sigma / 4.
[[nodiscard]] GoldEntry make_gold_entry(std::string_view word, double raw_mu, double raw_sigma);

// Splits one CSV record; double-quoted fields may contain commas and "" escapes.
[[nodiscard]] std::vector<std::string> split_csv_record(std::string_view line);

// Header row required, with columns word, valence_mean, valence_sd in any
// position. Other columns are ignored. Throws ParseError with the line number.
[[nodiscard]] std::vector<GoldEntry> load_gold(std::istream& source);
[[nodiscard]] std::vector<GoldEntry> load_gold_file(const std::string& path);

}  // namespace priorpol
