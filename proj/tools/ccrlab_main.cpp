#include "ccrlab/errors.hpp"
#include "ccrlab/scenarios.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

void summarize(const ccrlab::ScenarioReport& report) {
    using ccrlab::CheckStatus;
    for (const auto& c : report.checks) {
        if (c.status == CheckStatus::Pass) continue;
        std::cerr << ccrlab::to_string(c.status) << ": " << c.name << " measured "
                  << ccrlab::format_number(c.measured) << " " << c.relation << " "
                  << ccrlab::format_number(c.threshold) << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
    }
    std::cout << report.scenario << ": " << report.count(CheckStatus::Pass) << " pass, "
              << report.count(CheckStatus::Fail) << " fail, " << report.count(CheckStatus::Skipped)
              << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atom-pair entanglement in regular and reducible CCR representations"};
    app.require_subcommand(1);

    std::string scenario;
    std::string config_file;
    std::string out_dir;
    auto* run = app.add_subcommand("run", "Run one scenario and write its report");
    run->add_option("--scenario", scenario, "Scenario name")->required();
    run->add_option("--config", config_file, "JSON config file");
    run->add_option("--out", out_dir, "Output directory")->required();

    auto* sweep = app.add_subcommand("sweep", "Finite-N to limit convergence sweep");
    sweep->add_option("--config", config_file, "JSON config file");
    sweep->add_option("--out", out_dir, "Output directory")->required();

    std::uint64_t seed = ccrlab::ValidateOptions{}.seed;
    auto* val = app.add_subcommand("validate", "Seeded invariant suite");
    val->add_option("--seed", seed, "RNG seed");
    val->add_option("--out", out_dir, "Optional output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ccrlab::ScenarioReport report;
        if (*run || *sweep) {
            const std::string name = *run ? scenario : std::string("sweep");
            auto config = config_file.empty() ? ccrlab::ScenarioConfig::defaults_for(name)
                                              : ccrlab::load_config(config_file, name);
            config.validate();
            report = *run ? ccrlab::run_scenario(config) : ccrlab::convergence_sweep(config);
        } else {
            ccrlab::ValidateOptions options;
            options.seed = seed;
            report = ccrlab::validate(options);
        }
        if (!out_dir.empty()) ccrlab::write_report(report, out_dir);
        summarize(report);
        return report.exit_code();
    } catch (const ccrlab::SizeError& e) {
        std::cerr << "size ceiling: " << e.what() << "\n";
        return 3;
    } catch (const ccrlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
