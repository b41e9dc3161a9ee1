#include "magnetic/app/report.hpp"

#include <sstream>

namespace magnetic::app {

void Report::add(std::string name, bool pass, Json detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

void Report::merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    if (other.precision_error && !precision_error) precision_error = other.precision_error;
    wall_seconds += other.wall_seconds;
}

bool Report::passed() const { return !precision_error && counterexample() == nullptr; }

const Check* Report::counterexample() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

int Report::exit_code() const {
    if (precision_error) return 3;
    return counterexample() ? 1 : 0;
}

Json to_json(const Report& r, bool include_timing) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["task"] = r.task;
    j["parameters"] = r.parameters;
    j["verdict"] = r.precision_error ? "precision-shortfall" : (r.passed() ? "pass" : "fail");
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    if (const Check* bad = r.counterexample()) {
        Json ce;
        ce["check"] = bad->name;
        ce["detail"] = bad->detail;
        j["counterexample"] = std::move(ce);
    } else {
        j["counterexample"] = nullptr;
    }
    if (r.precision_error) j["precision_error"] = *r.precision_error;
    if (include_timing) j["timing"] = {{"wall_seconds", r.wall_seconds}};
    return j;
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << r.task << " " << r.parameters.dump() << "\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << "  " << c.detail.dump();
        out << "\n";
    }
    if (r.precision_error) out << "precision shortfall: " << *r.precision_error << "\n";
    out << "verdict: " << (r.precision_error ? "precision-shortfall" : (r.passed() ? "pass" : "fail"));
    out << " (" << r.checks.size() << " checks, " << r.wall_seconds << " s)\n";
    return out.str();
}

}  // namespace magnetic::app
