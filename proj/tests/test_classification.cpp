#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "priorpol/classification.hpp"
#include "priorpol/error.hpp"

using namespace priorpol;

namespace {

constexpr auto P = Label::positive;
constexpr auto N = Label::negative;
constexpr auto T = Label::tie;

}  // namespace

TEST_SUITE("classification")
{
    TEST_CASE("classify_word")
    {
        const auto correct = classify_word(-0.24375, -0.7);
        CHECK(correct.predicted == N);
        CHECK(correct.actual == N);
        CHECK(correct.correct());

        const auto wrong = classify_word(0.3, -0.2);
        CHECK(wrong.predicted == P);
        CHECK(wrong.actual == N);
        CHECK_FALSE(wrong.correct());

        const auto tie = classify_word(0.0, 0.5);
        CHECK(tie.predicted == T);
        CHECK_FALSE(tie.correct());

        CHECK_THROWS_AS((void)classify_word(0.3, 0.0), Error);
    }

    TEST_CASE("committee vote")
    {
        CHECK(committee_vote(std::vector{P, P, P, P, N, N}) == P);
        CHECK(committee_vote(std::vector{P, P, P, N, N, N}) == P);
        CHECK(committee_vote(std::vector{N, N, N, N, N, N}) == N);
        CHECK(committee_vote(std::vector{T, T, T, T, T, T}) == P);
        CHECK(committee_vote(std::vector{T, T, T, T, P, N}) == P);
        CHECK(committee_vote(std::vector{T, T, T, T, T, N}) == N);
        CHECK_THROWS_AS((void)committee_vote(std::vector{P, P, N}), Error);
        CHECK_THROWS_AS((void)committee_vote(std::vector{P, P, N, N, P, N, P}), Error);
    }

    TEST_CASE("classification report: hand-counted confusion matrices")
    {
        const auto half = classification_report(std::vector{P, N, N, P}, std::vector{P, P, N, N});
        CHECK(half.precision == doctest::Approx(0.5));
        CHECK(half.recall == doctest::Approx(0.5));
        CHECK(half.f1 == doctest::Approx(0.5));

        const auto perfect = classification_report(std::vector{P, N, P}, std::vector{P, N, P});
        CHECK(perfect.precision == 1.0);
        CHECK(perfect.recall == 1.0);
        CHECK(perfect.f1 == 1.0);

        const auto with_tie = classification_report(std::vector{T, N}, std::vector{P, N});
        CHECK(with_tie.per_class[0].recall == 0.0);
        CHECK(with_tie.per_class[0].precision == 0.0);
        CHECK(with_tie.per_class[1].precision == 1.0);
        CHECK(with_tie.per_class[1].recall == 1.0);
        CHECK(with_tie.confusion[0][2] == 1);
        CHECK(with_tie.precision == doctest::Approx(0.5));
        CHECK(with_tie.recall == doctest::Approx(0.5));

        // P != R in general under macro averaging.
        const auto skewed = classification_report(std::vector{P, P, P, N}, std::vector{P, P, N, N});
        CHECK(skewed.precision == doctest::Approx((2.0 / 3.0 + 1.0) / 2.0));
        CHECK(skewed.recall == doctest::Approx((1.0 + 0.5) / 2.0));
        CHECK(metric_value(skewed, ClassMetric::accuracy) == doctest::Approx(0.75));
    }

    TEST_CASE("classification report errors")
    {
        CHECK_THROWS_AS((void)classification_report(std::vector{P, P}, std::vector{P, P}), Error);
        CHECK_THROWS_AS((void)classification_report(std::vector{P}, std::vector{P, N}), Error);
        CHECK_THROWS_AS((void)classification_report(std::vector<Label>{}, std::vector<Label>{}), Error);
        CHECK_THROWS_AS((void)classification_report(std::vector{P, N}, std::vector{T, N}), Error);
    }

    TEST_CASE("property: _m and _d labels agree except where _d ties")
    {
        std::mt19937_64 rng(23);
        const RandomStream stream{1};
        for (int trial = 0; trial < 5000; ++trial) {
            const auto s = random_sense_list(rng);
            for (const auto [m, d] : {std::pair{FormulaId::fs_m, FormulaId::fs_d},
                                      {FormulaId::mean_m, FormulaId::mean_d},
                                      {FormulaId::senti_m, FormulaId::senti_d},
                                      {FormulaId::w1_m, FormulaId::w1_d},
                                      {FormulaId::w2_m, FormulaId::w2_d},
                                      {FormulaId::swrnd_m, FormulaId::swrnd_d}}) {
                const auto label_d = label_of(prior_polarity(d, s, stream));
                if (label_d != Label::tie) {
                    CHECK(label_of(prior_polarity(m, s, stream)) == label_d);
                }
            }
        }
    }

    TEST_CASE("classify_dataset on the miniature fixture")
    {
        const auto lexicon = load_swn(fixture_path("mini.tsv"));
        auto gold = load_gold_file(fixture_path("mini_gold.csv"));
        gold.push_back(make_gold_entry("joyless", 5.0, 1.0));  // midpoint: excluded
        const auto dataset = align(gold, lexicon);
        const auto run = classify_dataset(dataset, lexicon, 42);

        std::size_t nonzero = 0;
        for (const auto& item : dataset.items) {
            nonzero += item.gold->valence_mu != 0.0 ? 1 : 0;
        }
        CHECK(run.keys.size() == nonzero);
        CHECK(run.systems.size() == 9);
        for (const auto& system : run.systems) {
            CHECK(system.predictions.size() == run.keys.size());
        }
        CHECK_NOTHROW((void)run.system("cc"));
        CHECK_THROWS_AS((void)run.system("fs_m"), Error);

        const auto reports = classification_reports(run);
        REQUIRE(reports.size() == 9);
        for (std::size_t i = 1; i < reports.size(); ++i) {
            CHECK(reports[i - 1].f1 >= reports[i].f1);
        }
    }

    TEST_CASE("perfectly separable gold gives every deterministic family F1 = 1")
    {
        std::vector<GoldEntry> gold;
        std::vector<SenseScore> senses;
        for (int i = 0; i < 40; ++i) {
            const bool positive = i % 2 == 0;
            gold.push_back(make_gold_entry("w" + std::to_string(i), positive ? 8.0 : 2.0, 1.0));
            senses.push_back(positive ? SenseScore{0.5, 0.125} : SenseScore{0.0, 0.625});
        }
        const auto data = synthetic_data(gold, senses);
        const auto run = classify_dataset(data.dataset, data.lexicon, 42);
        for (const auto& report : classification_reports(run)) {
            if (report.name != "rnd") {
                CHECK(report.f1 == 1.0);
            }
        }
    }

    TEST_CASE("rnd on balanced synthetic words is a coin flip")
    {
        std::vector<GoldEntry> gold;
        std::vector<SenseScore> senses;
        for (int i = 0; i < 10000; ++i) {
            gold.push_back(make_gold_entry("w" + std::to_string(i), i % 2 == 0 ? 7.0 : 3.0, 1.0));
            senses.push_back({0.25, 0.0});
        }
        const auto data = synthetic_data(gold, senses);
        const auto run = classify_dataset(data.dataset, data.lexicon, 8);
        const auto report = classification_report(run.system("rnd").predictions, run.gold, "rnd");
        CHECK(report.f1 >= 0.45);
        CHECK(report.f1 <= 0.55);
    }
}
