#include "ccrlab/errors.hpp"
#include "ccrlab/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ccrlab {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

namespace {

Check make_check(const std::string& name, bool ok, double measured, const char* relation,
                 double threshold, const std::string& note) {
    // A non-finite measurement never passes.
    const bool pass = ok && std::isfinite(measured);
    return {name, pass ? CheckStatus::Pass : CheckStatus::Fail, measured, relation, threshold, note};
}

}  // namespace

void ScenarioReport::check_le(const std::string& name, double measured, double threshold,
                              const std::string& note) {
    checks.push_back(make_check(name, measured <= threshold, measured, "<=", threshold, note));
}

void ScenarioReport::check_lt(const std::string& name, double measured, double threshold,
                              const std::string& note) {
    checks.push_back(make_check(name, measured < threshold, measured, "<", threshold, note));
}

void ScenarioReport::check_gt(const std::string& name, double measured, double threshold,
                              const std::string& note) {
    checks.push_back(make_check(name, measured > threshold, measured, ">", threshold, note));
}

void ScenarioReport::check_near(const std::string& name, double measured, double expected,
                                double tolerance, const std::string& note) {
    const double dev = std::abs(measured - expected);
    std::ostringstream os;
    os << "value " << format_number(measured) << " vs expected " << format_number(expected);
    if (!note.empty()) os << "; " << note;
    checks.push_back(make_check(name, dev <= tolerance, dev, "<=", tolerance, os.str()));
}

void ScenarioReport::skip(const std::string& name, const std::string& note) {
    checks.push_back({name, CheckStatus::Skipped, 0.0, "", 0.0, note});
}

void ScenarioReport::fail(const std::string& name, const std::string& note) {
    checks.push_back({name, CheckStatus::Fail, std::nan(""), "", 0.0, note});
}

std::size_t ScenarioReport::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s ? 1 : 0;
    return n;
}

bool ScenarioReport::passed() const {
    return count(CheckStatus::Fail) == 0;
}

bool ScenarioReport::any_skipped() const {
    return count(CheckStatus::Skipped) > 0;
}

int ScenarioReport::exit_code() const {
    if (!passed()) return 1;
    if (any_skipped()) return 3;
    return 0;
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string table_csv(const ScenarioReport& report) {
    std::ostringstream os;
    for (std::size_t i = 0; i < report.table.columns.size(); ++i) {
        os << (i ? "," : "") << report.table.columns[i];
    }
    os << "\n";
    for (const auto& row : report.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string checks_csv(const ScenarioReport& report) {
    std::ostringstream os;
    os << "name,status,measured,relation,threshold,note\n";
    for (const auto& c : report.checks) {
        os << csv_field(c.name) << "," << to_string(c.status) << "," << format_number(c.measured) << ","
           << c.relation << "," << format_number(c.threshold) << "," << csv_field(c.note) << "\n";
    }
    return os.str();
}

std::string rho_csv(const ScenarioReport& report) {
    std::ostringstream os;
    os << "label,N,t,row,col,re,im\n";
    for (const auto& d : report.rho) {
        for (Eigen::Index i = 0; i < 4; ++i) {
            for (Eigen::Index j = 0; j < 4; ++j) {
                os << csv_field(d.label) << "," << format_number(d.n) << "," << format_number(d.t) << ","
                   << i << "," << j << "," << format_number(d.rho(i, j).real()) << ","
                   << format_number(d.rho(i, j).imag()) << "\n";
            }
        }
    }
    return os.str();
}

namespace {

// nlohmann cannot represent NaN/Inf; they become strings so the document stays valid.
nlohmann::ordered_json number(double x) {
    if (std::isfinite(x)) return x;
    return format_number(x);
}

}  // namespace

std::string report_json(const ScenarioReport& report) {
    nlohmann::ordered_json j;
    j["scenario"] = report.scenario;
    j["passed"] = report.passed();
    j["counts"] = {{"pass", report.count(CheckStatus::Pass)},
                   {"fail", report.count(CheckStatus::Fail)},
                   {"skipped", report.count(CheckStatus::Skipped)}};
    j["columns"] = report.table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.table.rows) {
        auto r = nlohmann::ordered_json::array();
        for (double x : row) r.push_back(number(x));
        rows.push_back(r);
    }
    j["rows"] = rows;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"status", to_string(c.status)},
                          {"measured", number(c.measured)},
                          {"relation", c.relation},
                          {"threshold", number(c.threshold)},
                          {"note", c.note}});
    }
    j["checks"] = checks;
    auto rho = nlohmann::ordered_json::array();
    for (const auto& d : report.rho) {
        auto m = nlohmann::ordered_json::array();
        for (Eigen::Index i = 0; i < 4; ++i) {
            auto r = nlohmann::ordered_json::array();
            for (Eigen::Index k = 0; k < 4; ++k) r.push_back({d.rho(i, k).real(), d.rho(i, k).imag()});
            m.push_back(r);
        }
        rho.push_back({{"label", d.label}, {"N", d.n}, {"t", d.t}, {"rho", m}});
    }
    j["rho"] = rho;
    j["provenance"] = report.provenance;
    return j.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << text;
}

}  // namespace

void write_report(const ScenarioReport& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
    write_file(dir / (report.scenario + ".csv"), table_csv(report));
    write_file(dir / (report.scenario + "_checks.csv"), checks_csv(report));
    write_file(dir / (report.scenario + ".json"), report_json(report));
    if (!report.rho.empty()) write_file(dir / (report.scenario + "_rho.csv"), rho_csv(report));
}

}  // namespace ccrlab
