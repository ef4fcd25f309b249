#include "ccrlab/errors.hpp"
#include "ccrlab/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace ccrlab {

std::vector<std::string> known_scenarios() {
    return {"infinity", "berezin", "reducible-brute", "reducible-limit", "single-mode"};
}

std::map<std::string, double> default_tolerances() {
    return {
        {"propagator", 1e-10},        // closed form vs spectral exponential, locality
        {"rho_irreducible", 1e-10},   // brute force vs the irreducible closed form
        {"entropy", 1e-12},
        {"schmidt", 1e-12},
        {"concurrence_bell", 1e-10},
        {"concurrence_curve", 1e-8},
        {"rho_reducible", 1e-8},      // brute force vs finite-N closed form
        {"coherence", 1e-10},
        {"ccr", 1e-12},
        {"vacuum", 1e-12},
        {"weights", 1e-12},
        {"central", 1e-10},
        {"limit", 1e-12},
        {"convergence", 0.02},        // max trace distance at the largest N
        {"conservation", 1e-10},
        {"fidelity", 1e-10},
        {"nonproduct", 1e-6},         // min second operator-Schmidt coefficient
        {"single_mode_entropy", 0.1}, // min entropy for N >= 2
        {"zero_time", 1e-12},
    };
}

std::vector<double> default_times() {
    constexpr double pi = std::numbers::pi;
    return {0.0, pi / 8.0, pi / 4.0, 3.0 * pi / 8.0, pi / 2.0};
}

VacuumProfile ProfileSpec::build() const {
    if (kind == "uniform") return VacuumProfile::uniform(count);
    if (kind == "plateau") return VacuumProfile::plateau(count, window_begin, window_end, rolloff);
    if (kind == "explicit") {
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= probabilities.size(); ++i) labels.push_back("k" + std::to_string(i));
        return VacuumProfile::from_probabilities(labels, probabilities);
    }
    throw ConfigError("unknown profile kind '" + kind + "' (expected uniform, plateau or explicit)");
}

nlohmann::ordered_json ProfileSpec::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    if (kind == "explicit") {
        j["probabilities"] = probabilities;
    } else {
        j["count"] = count;
    }
    if (kind == "plateau") {
        j["window"] = {window_begin, window_end};
        j["rolloff"] = rolloff;
    }
    return j;
}

ScenarioConfig ScenarioConfig::defaults_for(const std::string& scenario) {
    ScenarioConfig c;
    c.scenario = scenario;
    c.times = default_times();
    c.tolerances = default_tolerances();
    if (scenario == "infinity" || scenario == "berezin") {
        // n_values unused
    } else if (scenario == "reducible-brute") {
        c.n_values = {1, 2, 3};
    } else if (scenario == "reducible-limit" || scenario == "sweep") {
        c.n_values = {100, 1000, 10000};
    } else if (scenario == "single-mode") {
        c.n_values = {1, 2, 3, 4};
    } else {
        throw ConfigError("unknown scenario '" + scenario + "'");
    }
    return c;
}

namespace {

template <typename T>
T get_as(const nlohmann::json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& j, ScenarioConfig c) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> allowed{"scenario", "n_max", "d",    "cutoff", "N",
                                                  "profile",  "modes", "times", "tolerances",
                                                  "seed",     "ceiling", "out"};
    for (const auto& [key, _] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    if (j.contains("n_max")) c.n_max = get_as<std::size_t>(j, "n_max");
    if (j.contains("d")) c.d = get_as<std::size_t>(j, "d");
    if (j.contains("cutoff")) c.cutoff = get_as<std::size_t>(j, "cutoff");
    if (j.contains("N")) {
        const auto& n = j.at("N");
        if (n.is_array()) {
            c.n_values = get_as<std::vector<std::int64_t>>(j, "N");
        } else {
            c.n_values = {get_as<std::int64_t>(j, "N")};
        }
    }
    if (j.contains("profile")) {
        const auto& p = j.at("profile");
        if (!p.is_object()) throw ConfigError("config key 'profile' must be an object");
        ProfileSpec spec;
        if (p.contains("kind")) spec.kind = get_as<std::string>(p, "kind");
        if (p.contains("count")) spec.count = get_as<std::size_t>(p, "count");
        if (p.contains("rolloff")) spec.rolloff = get_as<double>(p, "rolloff");
        if (p.contains("window")) {
            const auto w = get_as<std::vector<std::size_t>>(p, "window");
            if (w.size() != 2) throw ConfigError("profile window must have two entries");
            spec.window_begin = w[0];
            spec.window_end = w[1];
        }
        if (p.contains("probabilities")) spec.probabilities = get_as<std::vector<double>>(p, "probabilities");
        c.profile = spec;
    }
    if (j.contains("modes")) c.modes = get_as<std::vector<std::string>>(j, "modes");
    if (j.contains("times")) c.times = get_as<std::vector<double>>(j, "times");
    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (!t.is_object()) throw ConfigError("config key 'tolerances' must be an object");
        for (const auto& [key, value] : t.items()) {
            if (!c.tolerances.contains(key)) throw ConfigError("unknown tolerance '" + key + "'");
            if (!value.is_number()) throw ConfigError("tolerance '" + key + "' must be a number");
            c.tolerances[key] = value.get<double>();
        }
    }
    if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("ceiling")) c.ceiling = get_as<std::size_t>(j, "ceiling");
    if (j.contains("out")) c.output_dir = get_as<std::string>(j, "out");
    return c;
}

double ScenarioConfig::tolerance(const std::string& name) const {
    auto it = tolerances.find(name);
    if (it == tolerances.end()) throw ConfigError("no tolerance named '" + name + "'");
    return it->second;
}

std::vector<std::string> ScenarioConfig::coupled_modes() const {
    if (!modes.empty()) return modes;
    const auto labels = profile.build().labels();
    if (labels.size() < 2) return labels;
    return {labels[0], labels[1]};
}

void ScenarioConfig::validate() const {
    for (double t : times) {
        if (!(t >= 0.0 && t <= 2.0 * std::numbers::pi)) {
            std::ostringstream os;
            os << "time " << t << " outside [0, 2 pi]";
            throw ConfigError(os.str());
        }
    }
    if (times.empty()) throw ConfigError("time grid is empty");
    for (const auto& [name, value] : tolerances) {
        if (!(value > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
    }
    for (auto n : n_values) {
        if (n < 1) throw ConfigError("N values must be >= 1");
    }
    if (ceiling < 4) throw ConfigError("dimension ceiling must be at least 4");
    (void)profile.build();
}

nlohmann::ordered_json ScenarioConfig::to_json() const {
    nlohmann::ordered_json j;
    j["scenario"] = scenario;
    j["n_max"] = n_max;
    j["d"] = d;
    j["cutoff"] = cutoff;
    j["N"] = n_values;
    j["profile"] = profile.to_json();
    j["modes"] = coupled_modes();
    j["times"] = times;
    nlohmann::ordered_json tol;
    for (const auto& [k, v] : tolerances) tol[k] = v;
    j["tolerances"] = tol;
    j["seed"] = seed;
    j["ceiling"] = ceiling;
    return j;
}

ScenarioConfig load_config(const std::filesystem::path& file, const std::string& scenario_override) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file '" + file.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file '" + file.string() + "' is not valid JSON: " + e.what());
    }
    std::string scenario = scenario_override;
    if (scenario.empty()) {
        if (!j.contains("scenario")) throw ConfigError("config file names no scenario");
        scenario = get_as<std::string>(j, "scenario");
    }
    auto c = ScenarioConfig::from_json(j, ScenarioConfig::defaults_for(scenario));
    c.validate();
    return c;
}

}  // namespace ccrlab
