#include "ccrlab/errors.hpp"
#include "ccrlab/scenarios.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace ccrlab;

namespace {

const Check* find_check(const ScenarioReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("ccrlab_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ScenarioConfig parse(const std::string& text, const std::string& scenario) {
    return ScenarioConfig::from_json(nlohmann::json::parse(text), ScenarioConfig::defaults_for(scenario));
}

}  // namespace

TEST_CASE("config parsing and validation") {
    auto c = parse(R"({"N": [2, 5], "profile": {"kind": "uniform", "count": 4},
                       "times": [0.5], "tolerances": {"convergence": 0.05}, "seed": 9})",
                   "reducible-limit");
    CHECK(c.n_values == std::vector<std::int64_t>{2, 5});
    CHECK(c.profile.build().z_max() == 0.25);
    CHECK(c.tolerance("convergence") == 0.05);
    CHECK(c.seed == 9);
    CHECK_NOTHROW(c.validate());
    CHECK(parse(R"({"N": 7})", "reducible-limit").n_values == std::vector<std::int64_t>{7});

    CHECK_THROWS_AS(parse(R"({"bogus": 1})", "infinity"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"tolerances": {"nope": 1}})", "infinity"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"n_max": "x"})", "infinity"), ConfigError);
    CHECK_THROWS_AS(parse(R"({"times": [7.0]})", "infinity").validate(), ConfigError);
    CHECK_THROWS_AS(parse(R"({"times": [-0.1]})", "infinity").validate(), ConfigError);
    CHECK_THROWS_AS(parse(R"({"tolerances": {"ccr": 0}})", "infinity").validate(), ConfigError);
    CHECK_THROWS_AS(parse(R"({"N": 0})", "reducible-brute").validate(), ConfigError);
    CHECK_THROWS_AS(parse(R"({"profile": {"kind": "gauss"}})", "infinity").validate(), ConfigError);
    CHECK_THROWS_AS(ScenarioConfig::defaults_for("nonsense"), ConfigError);

    ScenarioConfig unknown = ScenarioConfig::defaults_for("infinity");
    unknown.scenario = "nonsense";
    CHECK_THROWS_AS(run_scenario(unknown), ConfigError);
}

TEST_CASE("explicit and plateau profiles from config") {
    auto c = parse(R"({"profile": {"kind": "explicit", "probabilities": [0.2, 0.3, 0.5]}, "modes": ["k1", "k2"]})",
                   "reducible-brute");
    CHECK(c.profile.build().z_max() == 0.5);
    auto p = parse(R"({"profile": {"kind": "plateau", "count": 8, "window": [2, 4], "rolloff": 0.5}})",
                   "reducible-limit");
    CHECK(p.profile.build().size() == 8);
    CHECK_THROWS_AS(parse(R"({"profile": {"kind": "plateau", "window": [1]}})", "infinity"), ConfigError);
}

TEST_CASE("load_config reads files and reports errors") {
    const auto dir = temp_dir("load");
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "good.json") << R"({"scenario": "infinity", "n_max": 2})";
        std::ofstream(dir / "bad.json") << "{not json";
    }
    CHECK(load_config(dir / "good.json").n_max == 2);
    CHECK(load_config(dir / "good.json", "berezin").scenario == "berezin");
    CHECK_THROWS_AS(load_config(dir / "bad.json"), ConfigError);
    CHECK_THROWS_AS(load_config(dir / "missing.json"), ConfigError);
}

TEST_CASE("number formatting round-trips") {
    for (double x : {0.1, 1.0 / 3.0, std::numbers::pi, 1e-300, -2.5e17}) {
        CHECK(std::stod(format_number(x)) == x);
    }
    CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("report bookkeeping and exit codes") {
    ScenarioReport r;
    r.check_le("a", 1.0, 2.0);
    CHECK(r.exit_code() == 0);
    r.skip("b", "too big");
    CHECK(r.exit_code() == 3);
    r.check_le("c", std::nan(""), 1.0);
    CHECK(r.exit_code() == 1);
    r.check_near("d", 1.0, 1.5, 0.1);
    CHECK(r.checks.back().measured == 0.5);
    CHECK(r.count(CheckStatus::Fail) == 2);
}

TEST_CASE("infinity scenario passes and reports the expected values") {
    const auto r = run_scenario(ScenarioConfig::defaults_for("infinity"));
    CHECK(r.passed());
    CHECK_FALSE(r.any_skipped());
    const auto* bell = find_check(r, "concurrence_max_entangled");
    REQUIRE(bell != nullptr);
    CHECK(bell->measured <= 1e-10);
    CHECK(r.table.rows.size() == default_times().size());
    CHECK(r.rho.size() == default_times().size());
}

TEST_CASE("berezin scenario passes") {
    const auto r = run_scenario(ScenarioConfig::defaults_for("berezin"));
    CHECK(r.passed());
    REQUIRE(find_check(r, "final_bell_times_vacuum") != nullptr);
}

TEST_CASE("reducible-brute skips above the ceiling instead of failing") {
    auto c = ScenarioConfig::defaults_for("reducible-brute");
    c.n_values = {1, 4};
    c.ceiling = 300;
    const auto r = run_scenario(c);
    CHECK(r.passed());
    CHECK(r.any_skipped());
    CHECK(r.exit_code() == 3);
    CHECK(find_check(r, "reducible_brute_force N=4") != nullptr);
}

TEST_CASE("single-mode regression constant") {
    auto c = ScenarioConfig::defaults_for("single-mode");
    c.n_values = {1, 2};
    const auto r = run_scenario(c);
    CHECK(r.passed());
    REQUIRE(r.table.rows.size() == 2);
    // N = 2, Z1 = 1/2: an equal-weight two-term Schmidt decomposition.
    const double frozen = 0.69314718055994529;
    CHECK(std::abs(r.table.rows[1][1] - frozen) <= 1e-12);
    CHECK(std::abs(r.table.rows[0][1]) <= 1e-12);
}

TEST_CASE("convergence sweep tabulates and orders distances") {
    auto c = ScenarioConfig::defaults_for("sweep");
    c.profile.count = 4;
    c.times = {0.0, std::numbers::pi / 2.0};
    const auto r = convergence_sweep(c);
    CHECK(r.passed());
    REQUIRE(r.table.rows.size() == 6);
    CHECK(r.table.columns == std::vector<std::string>{"N", "t", "Z1", "Z2", "Z", "D"});
    CHECK(r.table.rows[3][5] > r.table.rows[4][5]);
    CHECK(r.table.rows[4][5] > r.table.rows[5][5]);
    c.n_values = {2000000};
    CHECK_THROWS_AS(convergence_sweep(c), DomainError);
}

TEST_CASE("written reports are deterministic and well formed") {
    const auto dir_a = temp_dir("det_a");
    const auto dir_b = temp_dir("det_b");
    const auto c = ScenarioConfig::defaults_for("infinity");
    write_report(run_scenario(c), dir_a);
    write_report(run_scenario(c), dir_b);
    for (const char* file : {"infinity.csv", "infinity.json", "infinity_rho.csv", "infinity_checks.csv"}) {
        CHECK(std::filesystem::exists(dir_a / file));
        CHECK(slurp(dir_a / file) == slurp(dir_b / file));
    }
    const auto j = nlohmann::json::parse(slurp(dir_a / "infinity.json"));
    CHECK(j.at("passed").get<bool>());
    CHECK(j.at("rho").at(0).at("rho").at(0).at(0).size() == 2);
    CHECK(j.at("provenance").at("config").at("scenario") == "infinity");
    const std::string rho = slurp(dir_a / "infinity_rho.csv");
    CHECK(rho.rfind("label,N,t,row,col,re,im\n", 0) == 0);
}

TEST_CASE("validate is green, seed-robust and catches the sign flip") {
    std::vector<std::vector<CheckStatus>> verdicts;
    for (std::uint64_t seed : {1ULL, 20240601ULL, 987654321ULL}) {
        const auto r = validate({seed, false});
        CHECK(r.passed());
        std::vector<CheckStatus> v;
        for (const auto& c : r.checks) v.push_back(c.status);
        verdicts.push_back(v);
    }
    CHECK(verdicts[0] == verdicts[1]);
    CHECK(verdicts[1] == verdicts[2]);

    const auto flipped = validate({20240601, true});
    CHECK_FALSE(flipped.passed());
    const auto* oracle = find_check(flipped, "closed_form_propagator");
    REQUIRE(oracle != nullptr);
    CHECK(oracle->status == CheckStatus::Fail);
    CHECK(oracle->measured > 1e-2);
}
