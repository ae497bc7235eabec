#include "cliquelab/report.hpp"

#include <algorithm>
#include <sstream>

namespace cliquelab::harness {

using nlohmann::json;

json report_to_json(const Report& r) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = r.command;
    doc["seed"] = r.seed;
    doc["input"] = r.input;
    if (!r.oracle.is_null()) doc["oracle"] = r.oracle;
    doc["results"] = r.results;
    if (!r.caps.is_null()) doc["caps"] = r.caps;
    if (!r.aggregate.is_null()) doc["aggregate"] = r.aggregate;
    if (!r.script_path.empty()) doc["script_path"] = r.script_path;
    return doc;
}

namespace {

std::string scalar_to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_block(std::ostringstream& out, const json& obj, const std::string& indent) {
    size_t width = 0;
    for (auto it = obj.begin(); it != obj.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        out << indent << it.key() << std::string(width - it.key().size(), ' ') << " : "
            << scalar_to_text(it.value()) << '\n';
    }
}

} // namespace

std::string emit_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";

    std::ostringstream out;
    out << "cliquelab report\n";
    json head;
    head["command"] = r.command;
    head["seed"] = r.seed;
    head["input"] = r.input.value("source", std::string{}) + " (" +
                    std::to_string(r.input.value("vertices", 0)) + " vertices, " +
                    std::to_string(r.input.value("edges", 0)) + " edges)";
    render_block(out, head, "  ");
    if (!r.oracle.is_null()) {
        out << "  oracle\n";
        render_block(out, r.oracle, "    ");
    }
    int i = 0;
    for (const auto& result : r.results) {
        out << "  result[" << i++ << "]\n";
        render_block(out, result, "    ");
    }
    if (!r.caps.is_null()) {
        out << "  caps\n";
        render_block(out, r.caps, "    ");
    }
    if (!r.aggregate.is_null()) {
        out << "  aggregate\n";
        render_block(out, r.aggregate, "    ");
    }
    if (!r.script_path.empty()) out << "  script  : " << r.script_path << '\n';
    return out.str();
}

} // namespace cliquelab::harness
