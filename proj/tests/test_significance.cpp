#include "doctest.h"

#include <cmath>
#include <random>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "fixtures.hpp"
#include "priorpol/error.hpp"
#include "priorpol/significance.hpp"
#include "priorpol/special_functions.hpp"

using namespace priorpol;

namespace {

// Independent references: Boost.Math distributions.
double boost_t_two_tailed(double t, double df)
{
    const boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

double boost_chi2_upper(double x)
{
    const boost::math::chi_squared dist(1.0);
    return boost::math::cdf(boost::math::complement(dist, x));
}

}  // namespace

TEST_SUITE("significance")
{
    TEST_CASE("special functions against values frozen from scipy.stats")
    {
        CHECK(student_t_two_tailed(4.242640687119285, 4) == doctest::Approx(0.013235599563682695).epsilon(1e-10));
        CHECK(student_t_two_tailed(2.0, 10) == doctest::Approx(0.07338803477074039).epsilon(1e-10));
        CHECK(student_t_two_tailed(0.5, 3) == doctest::Approx(0.651447964848151).epsilon(1e-10));
        CHECK(student_t_two_tailed(3.3, 200) == doctest::Approx(0.0011447226651288842).epsilon(1e-10));
        CHECK(student_t_two_tailed(1.0, 1) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(student_t_two_tailed(0.0, 7) == doctest::Approx(1.0));
        CHECK(chi_square_1df_upper(8.0) == doctest::Approx(0.004677734981047276).epsilon(1e-10));
        CHECK(chi_square_1df_upper(3.84) == doctest::Approx(0.05004352124870519).epsilon(1e-10));
        CHECK(chi_square_1df_upper(0.1) == doctest::Approx(0.7518296340458492).epsilon(1e-10));
        CHECK(regularized_incomplete_beta(0.0, 2, 3) == 0.0);
        CHECK(regularized_incomplete_beta(1.0, 2, 3) == 1.0);
        // I_x(1, 1) = x
        CHECK(regularized_incomplete_beta(0.3, 1, 1) == doctest::Approx(0.3).epsilon(1e-14));
        CHECK_THROWS_AS((void)regularized_incomplete_beta(1.5, 1, 1), Error);
    }

    TEST_CASE("paired t-test")
    {
        const std::vector<double> same{0.1, 0.4, 0.2};
        const auto zero = paired_t_test(same, same);
        CHECK(zero.statistic == 0.0);
        CHECK(zero.p_value == 1.0);

        const std::vector<double> a{1, 2, 3, 4, 5};
        const std::vector<double> b{0, 0, 0, 0, 0};
        const auto r = paired_t_test(a, b);
        CHECK(r.statistic == doctest::Approx(4.2426).epsilon(1e-4));
        CHECK(*r.df == 4.0);
        CHECK(std::abs(r.p_value - 0.0132) < 1e-3);

        const std::vector<double> shifted{1.5, 1.5, 1.5};
        const std::vector<double> base{0.5, 0.5, 0.5};
        CHECK_THROWS_WITH_AS((void)paired_t_test(shifted, base), doctest::Contains("degenerate"), Error);
        CHECK_THROWS_AS((void)paired_t_test(std::vector<double>{1}, std::vector<double>{2}), Error);
        CHECK_THROWS_AS((void)paired_t_test(a, std::vector<double>{1, 2}), Error);
    }

    TEST_CASE("chi-square")
    {
        const auto r = chi_square_success(60, 40, 40, 60);
        CHECK(r.statistic == 8.0);
        CHECK(std::abs(r.p_value - 0.00468) < 1e-4);

        const auto flat = chi_square_success(50, 50, 50, 50);
        CHECK(flat.statistic == 0.0);
        CHECK(flat.p_value == 1.0);

        const auto max = chi_square_success(100, 0, 0, 100);
        CHECK(max.statistic == doctest::Approx(200.0));
        CHECK(max.p_value < 1e-40);

        CHECK_THROWS_WITH_AS((void)chi_square_success(10, 0, 20, 0), doctest::Contains("degenerate"), Error);
        CHECK_THROWS_AS((void)chi_square_success(0, 0, 20, 5), Error);
    }

    TEST_CASE("t and chi-square p-values match Boost.Math on randomized fixtures")
    {
        std::mt19937_64 rng(31);
        std::normal_distribution<double> noise(0.0, 1.0);
        std::uniform_int_distribution<int> size(3, 300);
        std::uniform_real_distribution<double> shift(-0.5, 0.5);
        for (int fixture = 0; fixture < 20; ++fixture) {
            const auto n = static_cast<std::size_t>(size(rng));
            const double delta = shift(rng);
            std::vector<double> a(n);
            std::vector<double> b(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = noise(rng);
                b[i] = a[i] + delta + noise(rng);
            }
            const auto t = paired_t_test(a, b);
            CHECK(std::abs(t.p_value - boost_t_two_tailed(t.statistic, *t.df)) < 1e-6);

            const auto total = static_cast<std::size_t>(size(rng)) + 2;
            std::uniform_int_distribution<std::size_t> hits(1, total - 1);
            const auto ha = hits(rng);
            const auto hb = hits(rng);
            const auto c = chi_square_success(ha, total - ha, hb, total - hb);
            CHECK(std::abs(c.p_value - boost_chi2_upper(c.statistic)) < 1e-6);
        }
    }

    TEST_CASE("approximate randomization")
    {
        std::vector<Label> gold;
        std::vector<Label> good;
        std::vector<Label> bad;
        for (int i = 0; i < 100; ++i) {
            const auto label = i % 2 == 0 ? Label::positive : Label::negative;
            gold.push_back(label);
            good.push_back(label);
            bad.push_back(label == Label::positive ? Label::negative : Label::positive);
        }

        const auto same = approx_randomization(good, good, gold, ClassMetric::f1, 1000, 5);
        CHECK(same.p_value == 1.0);
        CHECK(same.statistic == 0.0);

        const auto strong = approx_randomization(good, bad, gold, ClassMetric::f1, 1000, 5);
        CHECK(strong.p_value <= 0.01);
        CHECK(strong.p_value >= 1.0 / 1001.0);

        CHECK(approx_randomization(good, bad, gold, ClassMetric::accuracy, 500, 9).p_value ==
              approx_randomization(good, bad, gold, ClassMetric::accuracy, 500, 9).p_value);

        // Swapping systems leaves the two-tailed p unchanged.
        std::mt19937_64 rng(37);
        std::vector<Label> noisy = good;
        for (auto& label : noisy) {
            if (rng() % 3 == 0) {
                label = label == Label::positive ? Label::negative : Label::tie;
            }
        }
        for (const auto metric : {ClassMetric::f1, ClassMetric::precision, ClassMetric::recall, ClassMetric::accuracy}) {
            CHECK(approx_randomization(good, noisy, gold, metric, 300, 2).p_value ==
                  approx_randomization(noisy, good, gold, metric, 300, 2).p_value);
        }

        CHECK_THROWS_AS((void)approx_randomization(good, std::vector<Label>(99, Label::positive), gold, ClassMetric::f1,
                                                   1000, 1),
                        Error);
        CHECK_THROWS_AS((void)approx_randomization(good, bad, gold, ClassMetric::f1, 99, 1), Error);
    }

    TEST_CASE("randomization p-value is monotone in the observed difference")
    {
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> unit(0.0, 0.3);
        std::vector<double> null(1000);
        for (auto& d : null) {
            d = unit(rng);
        }
        double previous = 2.0;
        for (double observed = 0.0; observed <= 0.35; observed += 0.01) {
            const double p = randomization_p_value(observed, null);
            CHECK(p <= previous);
            CHECK(p >= 1.0 / 1001.0);
            CHECK(p <= 1.0);
            previous = p;
        }
    }

    TEST_CASE("stars")
    {
        CHECK(stars(0.0004) == "***");
        CHECK(stars(0.004) == "**");
        CHECK(stars(0.04) == "*");
        CHECK(stars(0.05).empty());
        CHECK(stars(1.0).empty());
    }

    TEST_CASE("significance matrices")
    {
        std::vector<GoldEntry> gold;
        std::vector<SenseScore> senses;
        std::mt19937_64 rng(43);
        std::uniform_real_distribution<double> raw(1.5, 8.5);
        for (int i = 0; i < 1000; ++i) {
            gold.push_back(make_gold_entry("w" + std::to_string(i), raw(rng), 1.5));
            senses.push_back({0.125, 0.25});
        }
        const auto data = synthetic_data(gold, senses);
        const auto oracle = evaluate_scorer(data.dataset, "oracle", [](const AlignedItem& item) { return item.gold->valence_mu; });
        const RandomStream stream{42};
        const auto rnd = evaluate_scorer(data.dataset, "rnd",
                                         [&](const AlignedItem& item) { return score_rnd(item.key, stream); });

        const std::vector<EvalReport> copies{oracle, oracle};
        for (const auto metric : {RegressionMetric::mae, RegressionMetric::success}) {
            const auto m = significance_matrix(copies, metric);
            CHECK(m.cells[0][1].p_value == 1.0);
            CHECK(stars(m.cells[0][1].p_value).empty());
        }

        const std::vector<EvalReport> pair{oracle, rnd};
        for (const auto metric : {RegressionMetric::mae, RegressionMetric::success}) {
            const auto m = significance_matrix(pair, metric);
            CHECK(m.at("oracle", "rnd").p_value < 0.001);
            CHECK(m.at("oracle", "rnd").p_value == m.at("rnd", "oracle").p_value);
            CHECK(m.at("oracle", "oracle").p_value == 1.0);
        }

        auto truncated = rnd;
        truncated.rows.pop_back();
        const std::vector<EvalReport> mismatched{oracle, truncated};
        CHECK_THROWS_AS((void)significance_matrix(mismatched, RegressionMetric::mae), Error);

        const auto run = classify_dataset(data.dataset, data.lexicon, 42);
        const auto cm = significance_matrix(run, ClassMetric::f1, 200, 3);
        CHECK(cm.names.size() == run.systems.size());
        for (std::size_t i = 0; i < cm.names.size(); ++i) {
            for (std::size_t j = 0; j < cm.names.size(); ++j) {
                CHECK(cm.cells[i][j].p_value == cm.cells[j][i].p_value);
                CHECK(cm.cells[i][j].p_value > 0.0);
                CHECK(cm.cells[i][j].p_value <= 1.0);
            }
        }
        // Every deterministic family predicts the same label here.
        CHECK(cm.at("fs", "w2").p_value == 1.0);
    }
}
