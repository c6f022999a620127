#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "hpccsim/harness.hpp"

using namespace hpccsim;
using Catch::Approx;

namespace {

SuiteOptions small_options() {
    SuiteOptions opts;
    opts.stream_elements = 1 << 16;
    opts.ra_elements = 1 << 16;
    opts.ptrans_order = 64;
    opts.gemm_order = 64;
    opts.fft_batches = 3;
    opts.hpl_order = 64;
    opts.repetitions = 2;
    opts.netsim_repetitions = 3;
    return opts;
}

std::string dump_json(const ReportDocument& doc) { return report_to_json(doc).dump(2); }

// Structural validator for the subset of JSON Schema the shipped schema uses:
// type, required, properties, items.
bool matches_schema(const nlohmann::json& schema, const nlohmann::json& value, std::string& why) {
    if (schema.contains("type")) {
        const auto check_one = [&](const std::string& t) {
            if (t == "object") return value.is_object();
            if (t == "array") return value.is_array();
            if (t == "string") return value.is_string();
            if (t == "number") return value.is_number();
            if (t == "integer") return value.is_number_integer() || value.is_number_unsigned();
            if (t == "boolean") return value.is_boolean();
            if (t == "null") return value.is_null();
            return false;
        };
        const auto& type = schema.at("type");
        bool ok = false;
        if (type.is_string()) {
            ok = check_one(type.get<std::string>());
        } else {
            for (const auto& t : type) ok = ok || check_one(t.get<std::string>());
        }
        if (!ok) {
            why = "type mismatch against " + type.dump() + " for " + value.dump();
            return false;
        }
    }
    if (schema.contains("required")) {
        for (const auto& key : schema.at("required")) {
            if (!value.contains(key.get<std::string>())) {
                why = "missing required key " + key.get<std::string>();
                return false;
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema.at("properties").items()) {
            if (value.contains(key) && !matches_schema(sub, value.at(key), why)) return false;
        }
    }
    if (schema.contains("items") && value.is_array()) {
        for (const auto& item : value) {
            if (!matches_schema(schema.at("items"), item, why)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("default 520N suite produces seven passing rows") {
    const ReportDocument doc =
        run_suite(builtin_board("520N"), TuningConfig{}, small_options(), 42);
    REQUIRE(doc.rows.size() == 7);
    for (const auto& row : doc.rows) {
        INFO(row.benchmark << " residual=" << (row.residual ? *row.residual : -1));
        CHECK(row.passed);
    }
    CHECK(doc.all_passed());
    // metric units follow the benchmark conventions
    for (const auto& row : doc.rows) {
        if (row.benchmark == bench::kStream || row.benchmark == bench::kBeff) {
            CHECK(row.unit == "GB/s");
        } else if (row.benchmark == bench::kRandomAccess) {
            CHECK(row.unit == "MUOP/s");
        } else {
            CHECK(row.unit == "GFLOP/s");
        }
    }
}

TEST_CASE("one repetition collapses the wall statistics") {
    SuiteOptions opts = small_options();
    opts.repetitions = 1;
    opts.benchmarks = {bench::kPtrans};
    const ReportDocument doc = run_suite(builtin_board("520N"), TuningConfig{}, opts, 1);
    REQUIRE(doc.rows.size() == 1);
    CHECK(doc.rows[0].wall_min == doc.rows[0].wall_avg);
    CHECK(doc.rows[0].wall_avg == doc.rows[0].wall_max);
}

TEST_CASE("identical seeds give identical documents") {
    const auto a = run_suite(builtin_board("520N"), TuningConfig{}, small_options(), 7);
    const auto b = run_suite(builtin_board("520N"), TuningConfig{}, small_options(), 7);
    CHECK(dump_json(a) == dump_json(b));
}

TEST_CASE("boards without channels skip the network benchmark") {
    const ReportDocument doc =
        run_suite(builtin_board("U280-HBM2"), TuningConfig{}, small_options(), 3);
    for (const auto& row : doc.rows) CHECK(row.benchmark != bench::kBeff);
    SuiteOptions opts = small_options();
    opts.benchmarks = {bench::kBeff};
    CHECK_THROWS_AS(run_suite(builtin_board("U280-HBM2"), TuningConfig{}, opts, 3), ConfigError);
}

TEST_CASE("compare joins the published efficiencies") {
    ReportDocument doc = run_suite(builtin_board("520N"), TuningConfig{}, small_options(), 42);
    doc = compare_with_reference(std::move(doc), reference_table());
    double stream_eff = 0, gemm_eff = 0, ptrans_eff = 0, fft_eff = 0;
    for (const auto& row : doc.rows) {
        if (!row.efficiency) continue;
        if (row.benchmark == bench::kStream) stream_eff = *row.efficiency;
        if (row.benchmark == bench::kGemm) gemm_eff = *row.efficiency;
        if (row.benchmark == bench::kPtrans) ptrans_eff = *row.efficiency;
        if (row.benchmark == bench::kFft) fft_eff = *row.efficiency;
    }
    CHECK(stream_eff == Approx(0.872).margin(0.002));
    CHECK(gemm_eff == Approx(0.979).margin(0.002));
    CHECK(ptrans_eff == Approx(0.742).margin(0.002));
    CHECK(fft_eff == Approx(0.810).margin(0.002));

    // the network row keeps its simulated efficiency and reports the
    // published model value as reference only
    for (const auto& row : doc.rows) {
        if (row.benchmark == bench::kBeff) {
            REQUIRE(row.reference_value.has_value());
            CHECK(*row.reference_value == 8.139);
            CHECK_FALSE(row.note.empty());
        }
    }
}

TEST_CASE("compare leaves unknown boards unchanged but noted") {
    BoardSpec custom = builtin_board("520N");
    custom.name = "custom-board";
    SuiteOptions opts = small_options();
    opts.benchmarks = {bench::kPtrans};
    ReportDocument doc = run_suite(custom, TuningConfig{}, opts, 1);
    doc = compare_with_reference(std::move(doc), reference_table());
    REQUIRE(doc.rows.size() == 1);
    CHECK_FALSE(doc.rows[0].reference_value.has_value());
    CHECK(doc.rows[0].note.find("no reference data") != std::string::npos);
}

TEST_CASE("csv emission round-trips every value") {
    SuiteOptions opts = small_options();
    opts.benchmarks = {bench::kStream, bench::kGemm};
    ReportDocument doc = run_suite(builtin_board("520N"), TuningConfig{}, opts, 11);
    doc = compare_with_reference(std::move(doc), reference_table());

    std::ostringstream out;
    emit(doc, ReportFormat::csv, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("benchmark,metric,unit,model_value", 0) == 0);

    for (const auto& row : doc.rows) {
        std::string line;
        REQUIRE(std::getline(in, line));
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() >= 10);
        CHECK(fields[0] == row.benchmark);
        CHECK(std::stod(fields[3]) == *row.model_value); // exact round trip
        if (row.efficiency) CHECK(std::stod(fields[6]) == *row.efficiency);
        if (row.residual) CHECK(std::stod(fields[7]) == *row.residual);
    }
}

TEST_CASE("markdown contains one table per benchmark") {
    const ReportDocument doc =
        run_suite(builtin_board("520N"), TuningConfig{}, small_options(), 42);
    std::ostringstream out;
    emit(doc, ReportFormat::markdown, out);
    const std::string text = out.str();
    for (const auto& row : doc.rows) {
        CHECK(text.find("## " + row.benchmark) != std::string::npos);
    }
    std::size_t tables = 0;
    for (std::size_t pos = 0; (pos = text.find("| quantity | value |", pos)) != std::string::npos;
         ++pos) {
        ++tables;
    }
    CHECK(tables == doc.rows.size());
}

TEST_CASE("json report validates against the shipped schema") {
    ReportDocument doc = run_suite(builtin_board("520N"), TuningConfig{}, small_options(), 42);
    doc = compare_with_reference(std::move(doc), reference_table());
    const nlohmann::json produced = report_to_json(doc, true);

    std::ifstream schema_file(std::string(HPCCSIM_SOURCE_DIR) + "/docs/report_schema.json");
    REQUIRE(schema_file.good());
    nlohmann::json schema;
    schema_file >> schema;

    std::string why;
    const bool ok = matches_schema(schema, produced, why);
    INFO(why);
    CHECK(ok);
}

TEST_CASE("emitted files exclude wall clocks unless asked") {
    const ReportDocument doc =
        run_suite(builtin_board("520N"), TuningConfig{},
                  [] {
                      SuiteOptions o = small_options();
                      o.benchmarks = {bench::kPtrans};
                      return o;
                  }(),
                  2);
    std::ostringstream plain, timed;
    emit(doc, ReportFormat::json, plain);
    emit(doc, ReportFormat::json, timed, true);
    CHECK(plain.str().find("wall_min") == std::string::npos);
    CHECK(timed.str().find("wall_min") != std::string::npos);
}

TEST_CASE("model predictions for 520N") {
    const auto predictions =
        model_predictions(builtin_board("520N"), TuningConfig{}, SuiteOptions{});
    REQUIRE(predictions.size() >= 6);
    for (const auto& p : predictions) {
        CHECK(p.value >= 0.0);
        CHECK_FALSE(p.inputs.empty());
    }
}

TEST_CASE("suite rejects bad configuration") {
    SuiteOptions opts = small_options();
    opts.benchmarks = {"NOSUCH"};
    CHECK_THROWS_AS(run_suite(builtin_board("520N"), TuningConfig{}, opts, 1), ConfigError);
    opts = small_options();
    opts.repetitions = 0;
    CHECK_THROWS_AS(run_suite(builtin_board("520N"), TuningConfig{}, opts, 1), ConfigError);
}
