#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpccsim/board.hpp"
#include "hpccsim/errors.hpp"
#include "hpccsim/version.hpp"

namespace hpccsim {

enum class ReportFormat { json, csv, markdown };

inline ReportFormat report_format_from_name(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "md" || name == "markdown") return ReportFormat::markdown;
    throw ConfigError("unknown report format '" + std::string(name) + "'");
}

/// One suite result row. Values are stored in the benchmark's conventional
/// unit (GB/s, MUOP/s, GFLOP/s); absent quantities stay unset.
struct ReportRow {
    std::string benchmark;
    std::string metric;
    std::string unit;
    std::optional<double> model_value;
    std::optional<double> simulated_value;
    std::optional<double> reference_value;
    std::optional<double> efficiency; // measured/model, as a ratio
    std::optional<double> residual;
    double threshold = 0.0;
    bool passed = false;
    std::string note;
    double wall_min = 0.0, wall_avg = 0.0, wall_max = 0.0; // seconds
};

struct ReportDocument {
    std::string board;
    std::uint64_t seed = 0;
    std::string suite_version = kSuiteVersion;
    int repetitions = 1;
    std::string duplex;
    int nodes = 0;
    std::vector<ReportRow> rows;

    bool all_passed() const {
        for (const auto& r : rows) {
            if (!r.passed) return false;
        }
        return true;
    }
};

namespace detail {

/// Shortest representation that round-trips through strtod.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

inline std::string format_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

/// Six significant digits, for human-facing output.
inline std::string format_short(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline nlohmann::ordered_json optional_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace detail

// Column order is part of the output contract; see docs/report_schema.json.
inline const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> columns = {
        "benchmark", "metric", "unit",      "model_value", "simulated_value",
        "reference", "efficiency", "residual", "threshold",   "passed",
        "note"};
    return columns;
}

inline nlohmann::ordered_json report_to_json(const ReportDocument& doc, bool with_timings = false) {
    nlohmann::ordered_json j;
    j["suite_version"] = doc.suite_version;
    j["board"] = doc.board;
    j["seed"] = doc.seed;
    j["repetitions"] = doc.repetitions;
    if (!doc.duplex.empty()) j["duplex"] = doc.duplex;
    if (doc.nodes > 0) j["nodes"] = doc.nodes;
    j["all_passed"] = doc.all_passed();
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : doc.rows) {
        nlohmann::ordered_json row;
        row["benchmark"] = r.benchmark;
        row["metric"] = r.metric;
        row["unit"] = r.unit;
        row["model_value"] = detail::optional_to_json(r.model_value);
        row["simulated_value"] = detail::optional_to_json(r.simulated_value);
        row["reference"] = detail::optional_to_json(r.reference_value);
        row["efficiency"] = detail::optional_to_json(r.efficiency);
        row["residual"] = detail::optional_to_json(r.residual);
        row["threshold"] = r.threshold;
        row["passed"] = r.passed;
        row["note"] = r.note;
        if (with_timings) {
            row["wall_min"] = r.wall_min;
            row["wall_avg"] = r.wall_avg;
            row["wall_max"] = r.wall_max;
        }
        j["rows"].push_back(std::move(row));
    }
    return j;
}

inline void emit_json(const ReportDocument& doc, std::ostream& out, bool with_timings = false) {
    out << report_to_json(doc, with_timings).dump(2) << "\n";
}

inline void emit_csv(const ReportDocument& doc, std::ostream& out, bool with_timings = false) {
    const auto& columns = report_columns();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    if (with_timings) out << ",wall_min,wall_avg,wall_max";
    out << "\n";
    for (const auto& r : doc.rows) {
        out << r.benchmark << ',' << r.metric << ',' << r.unit << ','
            << detail::format_optional(r.model_value) << ','
            << detail::format_optional(r.simulated_value) << ','
            << detail::format_optional(r.reference_value) << ','
            << detail::format_optional(r.efficiency) << ','
            << detail::format_optional(r.residual) << ','
            << detail::format_double(r.threshold) << ',' << (r.passed ? "true" : "false") << ','
            << r.note;
        if (with_timings) {
            out << ',' << detail::format_double(r.wall_min) << ','
                << detail::format_double(r.wall_avg) << ',' << detail::format_double(r.wall_max);
        }
        out << "\n";
    }
}

/// One table per benchmark, values printed with their unit.
inline void emit_markdown(const ReportDocument& doc, std::ostream& out, bool with_timings = false) {
    out << "# Benchmark report: " << doc.board << "\n\n";
    out << "suite " << doc.suite_version << ", seed " << doc.seed << ", repetitions "
        << doc.repetitions;
    if (doc.nodes > 0) out << ", " << doc.nodes << " nodes (" << doc.duplex << " duplex)";
    out << "\n";
    auto value_with_unit = [](const std::optional<double>& v, const std::string& unit) {
        if (!v) return std::string("--");
        std::string s = detail::format_short(*v);
        if (!unit.empty()) s += " " + unit;
        return s;
    };
    for (const auto& r : doc.rows) {
        out << "\n## " << r.benchmark << "\n\n";
        out << "| quantity | value |\n|---|---|\n";
        out << "| metric | " << r.metric << " |\n";
        out << "| model | " << value_with_unit(r.model_value, r.unit) << " |\n";
        out << "| simulated | " << value_with_unit(r.simulated_value, r.unit) << " |\n";
        out << "| reference | " << value_with_unit(r.reference_value, r.unit) << " |\n";
        if (r.efficiency) {
            out << "| efficiency | " << detail::format_short(*r.efficiency * 100.0) << " % |\n";
        }
        if (r.residual) {
            out << "| residual | " << detail::format_short(*r.residual) << " (threshold "
                << detail::format_short(r.threshold) << ") |\n";
        }
        out << "| validation | " << (r.passed ? "pass" : "FAIL") << " |\n";
        if (with_timings) {
            out << "| wall time (min/avg/max) | " << detail::format_short(r.wall_min) << " / "
                << detail::format_short(r.wall_avg) << " / " << detail::format_short(r.wall_max)
                << " s |\n";
        }
        if (!r.note.empty()) out << "| note | " << r.note << " |\n";
    }
}

inline void emit(const ReportDocument& doc, ReportFormat format, std::ostream& out,
                 bool with_timings = false) {
    switch (format) {
    case ReportFormat::json: emit_json(doc, out, with_timings); break;
    case ReportFormat::csv: emit_csv(doc, out, with_timings); break;
    case ReportFormat::markdown: emit_markdown(doc, out, with_timings); break;
    }
}

inline void emit_to_file(const ReportDocument& doc, ReportFormat format,
                         const std::filesystem::path& path, bool with_timings = false) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report to '" + path.string() + "'");
    emit(doc, format, out, with_timings);
    if (!out.good()) throw ConfigError("I/O error while writing '" + path.string() + "'");
}

} // namespace hpccsim
