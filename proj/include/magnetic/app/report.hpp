#pragma once

#include "magnetic/series_json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace magnetic::app {

inline constexpr int kSchemaVersion = 1;

struct Check {
    std::string name;
    bool pass = true;
    Json detail = Json::object();
};

struct Report {
    std::string task;
    Json parameters = Json::object();
    std::vector<Check> checks;
    // Set when a computation could not reach the requested precision.
    std::optional<std::string> precision_error;
    double wall_seconds = 0;

    void add(std::string name, bool pass, Json detail = Json::object());
    void merge(const Report& other);
    bool passed() const;
    // The first failing check, if any.
    const Check* counterexample() const;
    // 0 all pass, 1 counterexample, 3 precision shortfall.
    int exit_code() const;
};

// Deterministic for fixed parameters; timing lives in its own field and can be left out.
Json to_json(const Report& r, bool include_timing = true);
std::string render_text(const Report& r);

}  // namespace magnetic::app
