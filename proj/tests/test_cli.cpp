#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = priorpol::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> with_data(std::vector<std::string> args)
{
    for (const auto& extra : {"--swn", "", "--gold", ""}) {
        args.emplace_back(extra);
    }
    args[args.size() - 3] = fixture_path("mini.tsv");
    args[args.size() - 1] = fixture_path("mini_gold.csv");
    return args;
}

std::size_t count_lines(const std::string& text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("usage errors exit 2")
    {
        CHECK(run({}).code == priorpol::cli::kExitUsage);
        CHECK(run({"frobnicate"}).code == priorpol::cli::kExitUsage);
        CHECK(run({"score", "--swn", fixture_path("cold.tsv")}).code == priorpol::cli::kExitUsage);
        const auto unknown = run({"score", "--swn", fixture_path("cold.tsv"), "--formula", "w3_d"});
        CHECK(unknown.code == priorpol::cli::kExitUsage);
        CHECK(unknown.err.find("w3_d") != std::string::npos);
        // The formula is checked before any file is read.
        CHECK(run({"score", "--swn", "/nonexistent", "--formula", "nope"}).code == priorpol::cli::kExitUsage);
        CHECK(run(with_data({"evaluate", "--subset", "some"})).code == priorpol::cli::kExitUsage);
        CHECK(run(with_data({"evaluate", "--output", "xml"})).code == priorpol::cli::kExitUsage);
        CHECK(run({"--help"}).code == priorpol::cli::kExitOk);
    }

    TEST_CASE("data errors exit 1")
    {
        const auto missing = run({"score", "--swn", "/nonexistent/swn.tsv", "--formula", "fs_m"});
        CHECK(missing.code == priorpol::cli::kExitData);
        CHECK_FALSE(missing.err.empty());
        CHECK(run({"evaluate", "--swn", fixture_path("mini.tsv"), "--gold", "/nonexistent.csv"}).code ==
              priorpol::cli::kExitData);
    }

    TEST_CASE("score reproduces the worked example")
    {
        const auto r = run({"score", "--swn", fixture_path("cold.tsv"), "--formula", "w2_d"});
        CHECK(r.code == 0);
        CHECK(r.out == "cold#a\t-0.212500\n");
        const auto fs = run({"score", "--swn", fixture_path("cold.tsv"), "--formula", "fs_m"});
        CHECK(fs.out == "cold#a\t-0.750000\n");
    }

    TEST_CASE("export round-trips through the parser")
    {
        const auto first = run({"export", "--swn", fixture_path("mini.tsv")});
        REQUIRE(first.code == 0);
        std::istringstream in(first.out);
        const auto reparsed = priorpol::parse_swn(in);
        CHECK(reparsed == priorpol::load_swn(fixture_path("mini.tsv")));
    }

    TEST_CASE("evaluate and classify are byte-deterministic")
    {
        for (const auto* command : {"evaluate", "classify"}) {
            const auto a = run(with_data({command, "--seed", "7"}));
            const auto b = run(with_data({command, "--seed", "7"}));
            CHECK(a.code == 0);
            CHECK_FALSE(a.out.empty());
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("evaluate table layout")
    {
        const auto r = run(with_data({"evaluate", "--formulas", "fs_m,rnd,w2_d"}));
        REQUIRE(r.code == 0);
        CHECK(count_lines(r.out) == 4);
        CHECK(r.out.rfind("metric\t", 0) == 0);
        CHECK(r.out.find("\nMAE\t") != std::string::npos);
        CHECK(r.out.find("\nsuccess\t") != std::string::npos);
        CHECK(r.out.find("\ns/e\t") != std::string::npos);
        CHECK(r.err.find("words dropped") != std::string::npos);
    }

    TEST_CASE("the affective subset drops the all-zero entries")
    {
        const auto all = run(with_data({"evaluate", "--output", "json"}));
        const auto affective = run(with_data({"evaluate", "--output", "json", "--subset", "affective"}));
        REQUIRE(all.code == 0);
        REQUIRE(affective.code == 0);
        const auto ja = nlohmann::json::parse(all.out);
        const auto jb = nlohmann::json::parse(affective.out);
        const auto rows = [](const nlohmann::json& j) { return j["reports"][0]["rows"].size(); };
        // writer#n and table#n have every sense at zero.
        CHECK(rows(jb) + 2 == rows(ja));
        CHECK(jb["reports"][0]["subset"] == "affective");
    }

    TEST_CASE("json outputs parse")
    {
        for (const auto* command : {"evaluate", "classify", "align-report"}) {
            const auto r = run(with_data({command, "--output", "json"}));
            REQUIRE(r.code == 0);
            CHECK(nlohmann::json::accept(r.out));
        }
    }

    TEST_CASE("classify prints P/R/F1 with a committee column")
    {
        const auto r = run(with_data({"classify"}));
        REQUIRE(r.code == 0);
        CHECK(count_lines(r.out) == 4);
        CHECK(r.out.find("\tcc") != std::string::npos);
        CHECK(r.out.find("\nF1\t") != std::string::npos);
    }

    TEST_CASE("align-report lists dropped words")
    {
        const auto r = run(with_data({"align-report"}));
        REQUIRE(r.code == 0);
        CHECK(r.out.find("dog#n") != std::string::npos);
        CHECK(r.err.find("zzzqx (no-lemma)") != std::string::npos);
        CHECK(r.err.find("running (no-lemma)") != std::string::npos);

        auto args = with_data({"align-report"});
        args.insert(args.end(), {"--exceptions", fixture_path("exceptions.tsv")});
        const auto with_exceptions = run(args);
        CHECK(with_exceptions.out.find("run#v") != std::string::npos);
    }

    TEST_CASE("significance")
    {
        const auto t = run(with_data({"significance", "--a", "w2_m", "--b", "rnd", "--metric", "mae"}));
        CHECK(t.code == 0);
        CHECK(t.out.find("paired t-test") != std::string::npos);

        const auto chi = run(with_data({"significance", "--a", "fs_d", "--b", "fs_m", "--metric", "success"}));
        CHECK(chi.code == 0);

        const auto ar = run(with_data({"significance", "--a", "cc", "--b", "rnd", "--metric", "f1", "--iterations",
                                       "200"}));
        CHECK(ar.code == 0);
        CHECK(ar.out == run(with_data({"significance", "--a", "cc", "--b", "rnd", "--metric", "f1", "--iterations",
                                        "200"}))
                            .out);

        CHECK(run(with_data({"significance", "--a", "fs_m", "--b", "fs_m", "--metric", "mae"})).code ==
              priorpol::cli::kExitUsage);
        CHECK(run(with_data({"significance", "--a", "cc", "--b", "rnd", "--metric", "mae"})).code ==
              priorpol::cli::kExitUsage);
        CHECK(run(with_data({"significance", "--a", "fs", "--b", "rnd", "--metric", "kappa"})).code ==
              priorpol::cli::kExitUsage);
        CHECK(run(with_data({"significance", "--a", "fs", "--b", "rnd", "--metric", "f1", "--iterations", "10"}))
                  .code == priorpol::cli::kExitUsage);
    }

    TEST_CASE("nothing aligned is a data error")
    {
        const auto r = run({"evaluate", "--swn", fixture_path("cold.tsv"), "--gold", fixture_path("mini_gold.csv"),
                            "--formula", "fs_m"});
        // cold is in both, so one item aligns
        CHECK(r.code == 0);
        const auto none = run({"evaluate", "--swn", fixture_path("cold.tsv"), "--gold",
                               fixture_path("no_overlap.csv")});
        CHECK(none.code == priorpol::cli::kExitData);
    }
}
