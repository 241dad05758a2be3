#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "gridgenus/grid.hpp"

namespace gridgenus {

using Json = nlohmann::ordered_json;

struct ReportOptions {
    bool construct = false;
    std::optional<std::uint64_t> oracle_budget;
};

// Full formula/classification report for one spec. Deterministic field
// order; every numeric result carries its source tag.
Json build_report(const GridSpec& spec, const ReportOptions& opts);

// Internal consistency of a built report (exit code 2 gate).
bool report_consistent(const Json& report);

// The same tree as an indented key/value text document.
std::string render_text(const Json& j);

std::uint64_t default_budget();

}  // namespace gridgenus
