#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace cliquelab::harness {

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { text, json };

// One refutation/run report. Everything that lands in the serialized forms is
// deterministic for a fixed seed, script, and input; wall times are kept out
// of reports on purpose and surface on stderr instead.
struct Report {
    std::string command;
    std::uint64_t seed = 0;
    nlohmann::json input;                            // {source, vertices, edges}
    nlohmann::json oracle;                           // null when not computed
    nlohmann::json results = nlohmann::json::array();
    nlohmann::json caps;                             // null when irrelevant
    nlohmann::json aggregate;                        // null unless sweeping
    std::string script_path;                         // "" when no script written

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json report_to_json(const Report& r);

// json: stable-keyed single document. text: fixed-width key/value blocks.
// Identical reports serialize byte-identically.
std::string emit_report(const Report& r, ReportFormat format);

} // namespace cliquelab::harness
