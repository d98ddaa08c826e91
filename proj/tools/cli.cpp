#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "priorpol/alignment.hpp"
#include "priorpol/classification.hpp"
#include "priorpol/error.hpp"
#include "priorpol/evaluation.hpp"
#include "priorpol/formulae.hpp"
#include "priorpol/gold.hpp"
#include "priorpol/lemmatizer.hpp"
#include "priorpol/lexicon.hpp"
#include "priorpol/prior_lexicon.hpp"
#include "priorpol/report.hpp"
#include "priorpol/significance.hpp"

namespace priorpol::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Output { tsv, json };

struct RunConfig {
    std::string swn_path;
    std::string gold_path;
    std::string exceptions_path;
    std::string formulas_text;
    std::string subset_text = "all";
    std::uint64_t seed = 42;
    std::string output_text = "tsv";
    bool strict = false;

    std::vector<FormulaId> formulas;
    Subset subset = Subset::all;
    Output output = Output::tsv;
};

std::vector<FormulaId> parse_formula_list(const std::string& text)
{
    if (text.empty()) {
        return {kAllFormulae.begin(), kAllFormulae.end()};
    }
    std::vector<FormulaId> ids;
    std::stringstream stream(text);
    std::string name;
    while (std::getline(stream, name, ',')) {
        if (name.empty()) {
            continue;
        }
        const auto id = parse_formula(name);
        if (!id) {
            throw UsageError("unknown formula '" + name + "'");
        }
        if (std::find(ids.begin(), ids.end(), *id) == ids.end()) {
            ids.push_back(*id);
        }
    }
    if (ids.empty()) {
        throw UsageError("empty formula list");
    }
    return ids;
}

// Validates everything that does not need file access.
void finalize(RunConfig& config)
{
    config.formulas = parse_formula_list(config.formulas_text);
    const auto subset = parse_subset(config.subset_text);
    if (!subset) {
        throw UsageError("unknown subset '" + config.subset_text + "' (expected all or affective)");
    }
    config.subset = *subset;
    if (config.output_text == "tsv") {
        config.output = Output::tsv;
    } else if (config.output_text == "json") {
        config.output = Output::json;
    } else {
        throw UsageError("unknown output format '" + config.output_text + "' (expected tsv or json)");
    }
}

void add_common(CLI::App& cmd, RunConfig& config, bool needs_gold)
{
    cmd.add_option("--swn", config.swn_path, "SentiWordNet-format sense file")->required();
    cmd.add_flag("--strict", config.strict, "Reject malformed lines instead of skipping them");
    if (needs_gold) {
        cmd.add_option("--gold", config.gold_path, "Gold CSV with word,valence_mean,valence_sd")->required();
        cmd.add_option("--exceptions", config.exceptions_path, "Lemmatizer exception table (inflected<TAB>lemma)");
        cmd.add_option("--subset", config.subset_text, "all or affective")->capture_default_str();
        cmd.add_option("--output", config.output_text, "tsv or json")->capture_default_str();
    }
    cmd.add_option("--seed", config.seed, "Seed for rnd / swrnd / randomization")->capture_default_str();
}

Lexicon load_lexicon(const RunConfig& config, std::ostream& err)
{
    return load_swn(config.swn_path, ParseOptions{config.strict, &err});
}

AlignedDataset load_dataset(const RunConfig& config, const Lexicon& lexicon, std::ostream& err)
{
    const auto gold = load_gold_file(config.gold_path);
    const auto exceptions =
        config.exceptions_path.empty() ? ExceptionTable{} : load_exceptions_file(config.exceptions_path);
    const auto aligned = align(gold, lexicon, exceptions);
    err << alignment_summary(aligned);
    auto dataset = select_subset(aligned, lexicon, config.subset);
    if (config.subset == Subset::affective) {
        err << "affective subset: " << dataset.lemma_pos_count() << " of " << aligned.lemma_pos_count()
            << " lemma#pos entries\n";
    }
    if (dataset.empty()) {
        throw Error("nothing aligned");
    }
    return dataset;
}

int cmd_score(const RunConfig& config, const std::string& formula, std::ostream& out, std::ostream& err)
{
    const auto id = parse_formula(formula);
    if (!id) {
        throw UsageError("unknown formula '" + formula + "'");
    }
    const auto lexicon = load_lexicon(config, err);
    export_prior_lexicon(lexicon, *id, config.seed, out);
    return kExitOk;
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto lexicon = load_lexicon(config, err);
    export_senses(lexicon, out);
    return kExitOk;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto lexicon = load_lexicon(config, err);
    const auto dataset = load_dataset(config, lexicon, err);
    const auto reports = evaluate_formulae(dataset, lexicon, config.formulas, config.seed, config.subset);
    for (const auto& r : reports) {
        if (r.tie_count > 0) {
            err << "tie policy applied: " << r.formula << " " << r.tie_count << " rows\n";
        }
    }
    out << (config.output == Output::json ? regression_json(reports, config.seed) : regression_table(reports));
    return kExitOk;
}

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto lexicon = load_lexicon(config, err);
    const auto dataset = load_dataset(config, lexicon, err);
    const auto run = classify_dataset(dataset, lexicon, config.seed);
    err << "classification items (nonzero gold mean): " << run.keys.size() << '\n';
    if (run.keys.empty()) {
        throw Error("no items with a nonzero gold mean");
    }
    const auto reports = classification_reports(run);
    out << (config.output == Output::json ? classification_json(run, reports, config.seed)
                                          : classification_table(reports));
    return kExitOk;
}

struct SignificanceArgs {
    std::string a;
    std::string b;
    std::string metric;
    std::size_t iterations = kDefaultIterations;
};

// Resolves a classification system name: a family, cc, or a formula id.
ClassSystem class_system(const std::string& name, const ClassificationRun& run, const AlignedDataset& dataset,
                         const Lexicon& lexicon, std::uint64_t seed)
{
    if (name == kCommitteeName || parse_family(name)) {
        return run.system(name);
    }
    return classify_formula(dataset, lexicon, *parse_formula(name), seed);
}

int cmd_significance(const RunConfig& config, const SignificanceArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.a == args.b) {
        throw UsageError("identical systems: '" + args.a + "'");
    }
    const auto regression = parse_regression_metric(args.metric);
    const auto classification = parse_class_metric(args.metric);
    if (!regression && !classification) {
        throw UsageError("unknown metric '" + args.metric + "' (mae, success, f1, precision, recall, accuracy)");
    }
    for (const auto* name : {&args.a, &args.b}) {
        const bool formula = parse_formula(*name).has_value();
        const bool family = parse_family(*name).has_value() || *name == kCommitteeName;
        if (regression && !formula) {
            throw UsageError("metric " + args.metric + " compares formulae; '" + *name + "' is not a formula");
        }
        if (classification && !formula && !family) {
            throw UsageError("unknown system '" + *name + "'");
        }
    }
    if (classification && args.iterations < kMinIterations) {
        throw UsageError("--iterations must be at least " + std::to_string(kMinIterations));
    }

    const auto lexicon = load_lexicon(config, err);
    const auto dataset = load_dataset(config, lexicon, err);
    TestResult result;
    if (regression) {
        const std::vector<FormulaId> ids{*parse_formula(args.a), *parse_formula(args.b)};
        const auto reports = evaluate_formulae(dataset, lexicon, ids, config.seed, config.subset);
        const auto& ra = reports[0].formula == args.a ? reports[0] : reports[1];
        const auto& rb = reports[0].formula == args.a ? reports[1] : reports[0];
        result = compare_reports(ra, rb, *regression);
    } else {
        const auto run = classify_dataset(dataset, lexicon, config.seed);
        if (run.keys.empty()) {
            throw Error("no items with a nonzero gold mean");
        }
        const auto sa = class_system(args.a, run, dataset, lexicon, config.seed);
        const auto sb = class_system(args.b, run, dataset, lexicon, config.seed);
        result = approx_randomization(sa.predictions, sb.predictions, run.gold, *classification, args.iterations,
                                      config.seed);
    }
    out << (config.output == Output::json ? test_result_json(args.a, args.b, args.metric, result)
                                          : test_result_line(args.a, args.b, args.metric, result));
    return kExitOk;
}

int cmd_align_report(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto lexicon = load_lexicon(config, err);
    const auto gold = load_gold_file(config.gold_path);
    const auto exceptions =
        config.exceptions_path.empty() ? ExceptionTable{} : load_exceptions_file(config.exceptions_path);
    const auto aligned = align(gold, lexicon, exceptions);
    err << alignment_summary(aligned);
    const auto dataset = select_subset(aligned, lexicon, config.subset);
    if (config.subset == Subset::affective) {
        err << "affective subset: " << dataset.lemma_pos_count() << " of " << aligned.lemma_pos_count()
            << " lemma#pos entries\n";
    }
    out << (config.output == Output::json ? alignment_json(dataset) : alignment_table(dataset));
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Prior-polarity scoring and evaluation over SentiWordNet-format lexica", "priorpol"};
    app.require_subcommand(1);

    RunConfig config;
    std::string score_formula;
    SignificanceArgs sig;

    auto* score = app.add_subcommand("score", "Score every lemma#pos with one formula");
    add_common(*score, config, false);
    score->add_option("--formula", score_formula, "Formula id")->required();

    auto* exporter = app.add_subcommand("export", "Re-emit the parsed sense lexicon in normalized SWN layout");
    add_common(*exporter, config, false);

    auto* evaluate = app.add_subcommand("evaluate", "MAE / success / s/e per formula");
    add_common(*evaluate, config, true);
    evaluate->add_option("--formulas,--formula", config.formulas_text, "Comma-separated formula ids (default: all)");

    auto* classify = app.add_subcommand("classify", "Binary polarity P/R/F1 per family plus committee");
    add_common(*classify, config, true);

    auto* significance = app.add_subcommand("significance", "Compare two systems on one metric");
    add_common(*significance, config, true);
    significance->add_option("--a", sig.a, "First system (formula, family or cc)")->required();
    significance->add_option("--b", sig.b, "Second system")->required();
    significance->add_option("--metric", sig.metric, "mae, success, f1, precision, recall or accuracy")->required();
    significance->add_option("--iterations", sig.iterations, "Randomization shuffles")->capture_default_str();

    auto* align_report = app.add_subcommand("align-report", "Show how gold words map onto lemma#pos keys");
    add_common(*align_report, config, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        finalize(config);
        if (score->parsed()) {
            return cmd_score(config, score_formula, out, err);
        }
        if (exporter->parsed()) {
            return cmd_export(config, out, err);
        }
        if (evaluate->parsed()) {
            return cmd_evaluate(config, out, err);
        }
        if (classify->parsed()) {
            return cmd_classify(config, out, err);
        }
        if (significance->parsed()) {
            return cmd_significance(config, sig, out, err);
        }
        if (align_report->parsed()) {
            return cmd_align_report(config, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace priorpol::cli
