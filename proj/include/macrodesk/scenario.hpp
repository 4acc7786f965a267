#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "macrodesk/csv.hpp"

namespace macrodesk::scenario {

struct OutputSpec {
    std::string type;  // "csv" or "table"
    std::string path;  // csv only, relative to the output directory
};

struct RunResult {
    std::string name;
    std::string kind;
    csv::Table table{std::vector<std::string>{}};
    std::vector<std::string> notes;  // headline numbers, verdicts, thresholds
    std::vector<OutputSpec> outputs;
};

// Validates and executes one scenario document. Bad documents raise
// ValidationError with a JSON-pointer-style path; economically impossible
// configurations raise the owning module's ModelError.
RunResult run_scenario(const nlohmann::json& doc);
RunResult run_scenario_file(const std::string& path);

struct CatalogEntry {
    std::string name;
    std::string kind;
    std::string description;
    std::string file;
};

// Scans the given directories for *.json scenarios, shallowly parsing each
// for its name/kind/description. A file that fails to parse is an error
// naming the file.
std::vector<CatalogEntry> list_scenarios(const std::vector<std::string>& dirs);

}  // namespace macrodesk::scenario
