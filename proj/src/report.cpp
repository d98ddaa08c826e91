#include "priorpol/report.hpp"

#include "json.hpp"
#include <fmt/format.h>

namespace priorpol {

using nlohmann::json;

namespace {

json optional_number(std::optional<double> value)
{
    return value ? json(*value) : json(nullptr);
}

json gold_json(const GoldEntry& gold)
{
    return json{{"word", gold.word},
                {"valence_mu", gold.valence_mu},
                {"valence_sigma", gold.valence_sigma},
                {"raw_mu", gold.raw_mu},
                {"raw_sigma", gold.raw_sigma}};
}

}  // namespace

std::string format_metric(std::optional<double> value)
{
    if (!value) {
        return "inf";
    }
    auto text = fmt::format("{:.3f}", *value);
    if (text == "-0.000") {
        text.erase(0, 1);
    }
    return text;
}

std::string regression_table(std::span<const EvalReport> reports)
{
    std::string out = "metric";
    for (const auto& r : reports) {
        out += '\t' + r.formula;
    }
    out += "\nMAE";
    for (const auto& r : reports) {
        out += '\t' + format_metric(r.mae);
    }
    out += "\nsuccess";
    for (const auto& r : reports) {
        out += '\t' + format_metric(r.success_rate);
    }
    out += "\ns/e";
    for (const auto& r : reports) {
        out += '\t' + format_metric(r.s_over_e);
    }
    out += '\n';
    return out;
}

std::string classification_table(std::span<const ClassReport> reports)
{
    std::string out = "metric";
    for (const auto& r : reports) {
        out += '\t' + r.name;
    }
    out += "\nPrecision";
    for (const auto& r : reports) {
        out += '\t' + format_metric(r.precision);
    }
    out += "\nRecall";
    for (const auto& r : reports) {
        out += '\t' + format_metric(r.recall);
    }
    out += "\nF1";
    for (const auto& r : reports) {
        out += '\t' + format_metric(r.f1);
    }
    out += '\n';
    return out;
}

std::string regression_json(std::span<const EvalReport> reports, std::uint64_t seed)
{
    json doc{{"seed", seed}, {"reports", json::array()}};
    for (const auto& r : reports) {
        json rows = json::array();
        for (const auto& row : r.rows) {
            rows.push_back(json{{"key", row.key.str()},
                                {"prediction", row.prediction},
                                {"gold_mu", row.gold_mu},
                                {"gold_sigma", row.gold_sigma},
                                {"abs_error", row.abs_error},
                                {"zscore", optional_number(row.zscore)},
                                {"success", row.success}});
        }
        doc["reports"].push_back(json{{"formula", r.formula},
                                      {"subset", subset_name(r.subset)},
                                      {"n", r.rows.size()},
                                      {"mae", r.mae},
                                      {"success", r.success_rate},
                                      {"s_over_e", optional_number(r.s_over_e)},
                                      {"tie_count", r.tie_count},
                                      {"rows", std::move(rows)}});
    }
    return doc.dump(2) + '\n';
}

std::string classification_json(const ClassificationRun& run, std::span<const ClassReport> reports,
                                 std::uint64_t seed)
{
    json doc{{"seed", seed}, {"n", run.keys.size()}, {"reports", json::array()}, {"rows", json::array()}};
    for (const auto& r : reports) {
        json confusion = json::object();
        for (const auto actual : {Label::positive, Label::negative}) {
            json row = json::object();
            for (const auto predicted : {Label::positive, Label::negative, Label::tie}) {
                row[std::string(label_name(predicted))] =
                    r.confusion[static_cast<std::size_t>(actual)][static_cast<std::size_t>(predicted)];
            }
            confusion[std::string(label_name(actual))] = std::move(row);
        }
        doc["reports"].push_back(json{{"system", r.name},
                                      {"precision", r.precision},
                                      {"recall", r.recall},
                                      {"f1", r.f1},
                                      {"confusion", std::move(confusion)}});
    }
    for (std::size_t i = 0; i < run.keys.size(); ++i) {
        json row{{"key", run.keys[i].str()}, {"gold", label_name(run.gold[i])}};
        for (const auto& system : run.systems) {
            row[system.name] = label_name(system.predictions[i]);
        }
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + '\n';
}

std::string alignment_table(const AlignedDataset& dataset)
{
    std::string out;
    for (const auto& item : dataset.items) {
        out += fmt::format("{}\t{}\t{:.6f}\t{:.6f}\t{}\n", item.gold->word, item.key.str(), item.gold->valence_mu,
                           item.gold->valence_sigma, item.lemma_source);
    }
    return out;
}

std::string alignment_json(const AlignedDataset& dataset)
{
    json doc{{"source_word_count", dataset.source_word_count},
             {"lemma_count", dataset.lemma_count},
             {"lemma_pos_count", dataset.lemma_pos_count()},
             {"items", json::array()},
             {"dropped", json::array()}};
    for (const auto& item : dataset.items) {
        doc["items"].push_back(json{{"key", item.key.str()}, {"source", item.lemma_source}, {"gold", gold_json(*item.gold)}});
    }
    for (const auto& d : dataset.dropped) {
        doc["dropped"].push_back(json{{"word", d.word}, {"reason", d.reason}});
    }
    return doc.dump(2) + '\n';
}

std::string alignment_summary(const AlignedDataset& dataset)
{
    std::string out = fmt::format("words read: {}\nwords aligned: {}\nwords dropped: {}\nlemma#pos entries: {}\n",
                                  dataset.source_word_count, dataset.lemma_count, dataset.dropped.size(),
                                  dataset.lemma_pos_count());
    for (const auto& d : dataset.dropped) {
        out += fmt::format("dropped: {} ({})\n", d.word, d.reason);
    }
    return out;
}

std::string test_result_line(std::string_view a, std::string_view b, std::string_view metric, const TestResult& result)
{
    return fmt::format("{}\t{}\t{}\t{}\t{:.4f}\t{}\t{:.4g}\t{}\n", a, b, metric, result.method, result.statistic,
                       result.df ? fmt::format("{:g}", *result.df) : std::string("-"), result.p_value,
                       stars(result.p_value));
}

std::string test_result_json(std::string_view a, std::string_view b, std::string_view metric, const TestResult& result)
{
    return json{{"a", a},
                {"b", b},
                {"metric", metric},
                {"method", result.method},
                {"statistic", result.statistic},
                {"df", optional_number(result.df)},
                {"p_value", result.p_value},
                {"stars", stars(result.p_value)}}
               .dump(2) +
           '\n';
}

}  // namespace priorpol
