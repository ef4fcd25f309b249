// scenarios.hpp: end-to-end experiments binding representations, dynamics and
// entanglement measures, with deterministic CSV/JSON reports.

#pragma once

#include "ccrlab/representations.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace ccrlab {

inline constexpr const char* kVersion = "1.0.0";

// How to build the reducible representation's vacuum profile.
struct ProfileSpec {
    std::string kind{"uniform"};  // uniform | plateau | explicit
    std::size_t count{2};
    std::size_t window_begin{0};
    std::size_t window_end{0};
    double rolloff{1.0};
    std::vector<double> probabilities;  // kind == explicit

    VacuumProfile build() const;
    nlohmann::ordered_json to_json() const;
};

struct ScenarioConfig {
    std::string scenario;
    std::size_t n_max{1};
    std::size_t d{2};
    std::size_t cutoff{1};
    std::vector<std::int64_t> n_values;
    ProfileSpec profile;
    // Profile labels of the two coupled modes; empty means the first two labels.
    std::vector<std::string> modes;
    std::vector<double> times;
    std::map<std::string, double> tolerances;
    std::filesystem::path output_dir{"."};
    std::uint64_t seed{0};
    std::size_t ceiling{kDefaultBruteForceCeiling};

    // Defaults for a named scenario; throws ConfigError for unknown names.
    static ScenarioConfig defaults_for(const std::string& scenario);
    // Applies keys from `j` on top of `base`.
    static ScenarioConfig from_json(const nlohmann::json& j, ScenarioConfig base);

    double tolerance(const std::string& name) const;
    std::vector<std::string> coupled_modes() const;
    void validate() const;
    nlohmann::ordered_json to_json() const;
};

std::vector<std::string> known_scenarios();
std::map<std::string, double> default_tolerances();
std::vector<double> default_times();

// Reads a JSON config file. The "scenario" key selects the defaults, and
// `scenario_override` (if nonempty) takes precedence over it.
ScenarioConfig load_config(const std::filesystem::path& file, const std::string& scenario_override = "");

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status{CheckStatus::Pass};
    double measured{0.0};
    std::string relation;  // how measured is compared with threshold
    double threshold{0.0};
    std::string note;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct RhoDump {
    std::string label;
    double n{0.0};
    double t{0.0};
    Eigen::Matrix4cd rho;
};

struct ScenarioReport {
    std::string scenario;
    Table table;
    std::vector<RhoDump> rho;
    std::vector<Check> checks;
    nlohmann::ordered_json provenance;

    // measured <= threshold
    void check_le(const std::string& name, double measured, double threshold, const std::string& note = "");
    // measured < threshold
    void check_lt(const std::string& name, double measured, double threshold, const std::string& note = "");
    // measured > threshold
    void check_gt(const std::string& name, double measured, double threshold, const std::string& note = "");
    // |measured - expected| <= tolerance; stores the deviation as measured.
    void check_near(const std::string& name, double measured, double expected, double tolerance,
                    const std::string& note = "");
    void skip(const std::string& name, const std::string& note);
    // Records a failure for a check whose computation threw.
    void fail(const std::string& name, const std::string& note);

    bool passed() const;
    bool any_skipped() const;
    std::size_t count(CheckStatus s) const;
    // 0 all pass, 1 assertion failure, 3 skipped for size reasons.
    int exit_code() const;
};

std::string format_number(double x);
std::string table_csv(const ScenarioReport& report);
std::string checks_csv(const ScenarioReport& report);
std::string rho_csv(const ScenarioReport& report);
std::string report_json(const ScenarioReport& report);

// Writes <scenario>.csv, <scenario>.json, <scenario>_checks.csv and, when
// density matrices were recorded, <scenario>_rho.csv.
void write_report(const ScenarioReport& report, const std::filesystem::path& dir);

ScenarioReport run_scenario(const ScenarioConfig& config);

// Trace distance between the finite-N and the N -> infinity atomic density
// matrices over the N list and time grid.
ScenarioReport convergence_sweep(const ScenarioConfig& config);

struct ValidateOptions {
    std::uint64_t seed{20240601};
    // Test hook: flips the sign of the sinc terms in the closed-form propagator.
    bool flip_propagator_sign{false};
};

ScenarioReport validate(const ValidateOptions& options = {});

}  // namespace ccrlab
