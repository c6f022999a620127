// Command-line front end: analytic models, kernel simulations, network
// simulation and the combined suite report.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpccsim/harness.hpp"

namespace {

using namespace hpccsim;

struct CommonArgs {
    std::string board = "520N";
    std::string benchmark = "all";
    std::optional<std::uint64_t> size;
    std::optional<int> block;
    std::optional<int> unroll;
    std::optional<int> buffer;
    std::optional<int> replications;
    int nodes = 2;
    std::string duplex = "full";
    std::uint64_t seed = 42;
    std::string format = "md";
    std::string out = "-";
    int repetitions = 3;
    bool timings = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--board", args.board, "Built-in board name or path to a board JSON file");
    cmd->add_option("--benchmark", args.benchmark, "Benchmark name or 'all'");
    cmd->add_option("--size", args.size, "Problem size (elements or matrix order)");
    cmd->add_option("--block", args.block, "Local-memory block size");
    cmd->add_option("--unroll", args.unroll, "Global-memory unrolling factor");
    cmd->add_option("--buffer", args.buffer, "Local buffer size (STREAM/RandomAccess)");
    cmd->add_option("--replications", args.replications, "Number of kernel replications");
    cmd->add_option("--nodes", args.nodes, "Ring size for the network benchmark")
        ->check(CLI::Range(2, 1024));
    cmd->add_option("--duplex", args.duplex, "Channel usage of the exchange kernels")
        ->check(CLI::IsMember({"half", "full"}));
    cmd->add_option("--seed", args.seed, "Seed for generated input data");
    cmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
    cmd->add_option("--out", args.out, "Output path, '-' for stdout");
    cmd->add_option("--reps", args.repetitions, "Repetitions per benchmark")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--timings", args.timings,
                  "Include wall-clock columns (host timings, not performance claims)");
}

TuningConfig tuning_from_args(const CommonArgs& args) {
    TuningConfig t;
    if (args.block) t.block_size = *args.block;
    if (args.unroll) t.global_mem_unroll = *args.unroll;
    if (args.buffer) t.device_buffer_size = *args.buffer;
    if (args.replications) t.num_replications = *args.replications;
    validate(t);
    return t;
}

SuiteOptions options_from_args(const CommonArgs& args) {
    SuiteOptions opts;
    opts.repetitions = args.repetitions;
    opts.nodes = args.nodes;
    opts.duplex = args.duplex == "half" ? DuplexMode::half : DuplexMode::full;
    if (args.benchmark != "all") {
        const auto& names = bench::all();
        if (std::find(names.begin(), names.end(), args.benchmark) == names.end()) {
            throw ConfigError("unknown benchmark '" + args.benchmark + "'");
        }
        opts.benchmarks = {args.benchmark};
    }
    if (args.size) {
        const std::uint64_t n = *args.size;
        opts.stream_elements = n;
        opts.ra_elements = n;
        opts.ptrans_order = static_cast<int>(n);
        opts.gemm_order = static_cast<int>(n);
        opts.hpl_order = static_cast<int>(n);
    }
    if (args.buffer) {
        opts.ra_buf_local = static_cast<std::size_t>(*args.buffer);
        opts.ra_model_buf = opts.ra_buf_local;
        // keep the model's unroll a divisor of the buffer
        opts.ra_model_unroll =
            static_cast<int>(std::gcd(opts.ra_model_buf, static_cast<std::size_t>(opts.ra_model_unroll)));
    }
    if (args.unroll && args.benchmark == bench::kRandomAccess) {
        opts.ra_model_unroll = *args.unroll;
    }
    return opts;
}

void write_output(const std::string& text, const std::string& out) {
    if (out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw ConfigError("cannot write output file '" + out + "'");
    file << text;
}

void emit_document(const ReportDocument& doc, const CommonArgs& args) {
    std::ostringstream buf;
    emit(doc, report_format_from_name(args.format), buf, args.timings);
    write_output(buf.str(), args.out);
}

int run_model(const CommonArgs& args) {
    const BoardSpec board = resolve_board(args.board);
    const TuningConfig tuning = tuning_from_args(args);
    const SuiteOptions opts = options_from_args(args);
    auto predictions = model_predictions(board, tuning, opts);
    if (!opts.benchmarks.empty()) {
        std::erase_if(predictions, [&](const ModelPrediction& p) {
            return p.benchmark != opts.benchmarks.front();
        });
        if (predictions.empty()) {
            throw ConfigError("no analytic model available for benchmark '" +
                              opts.benchmarks.front() + "' on board '" + board.name + "'");
        }
    }

    std::ostringstream buf;
    const ReportFormat format = report_format_from_name(args.format);
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["suite_version"] = kSuiteVersion;
        j["board"] = board.name;
        j["predictions"] = predictions_to_json(predictions);
        buf << j.dump(2) << "\n";
    } else if (format == ReportFormat::csv) {
        buf << "benchmark,metric,value,unit\n";
        for (const auto& p : predictions) {
            buf << p.benchmark << ',' << p.metric << ',' << detail::format_double(p.value) << ','
                << p.unit << "\n";
        }
    } else {
        buf << "# Analytic models: " << board.name << "\n\n";
        buf << "| benchmark | metric | value | unit |\n|---|---|---|---|\n";
        for (const auto& p : predictions) {
            buf << "| " << p.benchmark << " | " << p.metric << " | "
                << detail::format_short(p.value) << " | " << p.unit << " |\n";
        }
    }
    write_output(buf.str(), args.out);
    return 0;
}

int run_simulate(const CommonArgs& args) {
    const BoardSpec board = resolve_board(args.board);
    const TuningConfig tuning = tuning_from_args(args);
    SuiteOptions opts = options_from_args(args);
    if (opts.benchmarks.empty()) {
        // kernel simulations only; the network benchmark has its own command
        opts.benchmarks = supported_benchmarks(board);
        std::erase(opts.benchmarks, std::string(bench::kBeff));
    }
    const ReportDocument doc = run_suite(board, tuning, opts, args.seed);
    emit_document(doc, args);
    return doc.all_passed() ? 0 : 1;
}

int run_beff_cmd(const CommonArgs& args) {
    const BoardSpec board = resolve_board(args.board);
    const TuningConfig tuning = tuning_from_args(args);
    SuiteOptions opts = options_from_args(args);
    opts.benchmarks = {bench::kBeff};
    const ReportDocument doc = run_suite(board, tuning, opts, args.seed);
    emit_document(doc, args);
    return doc.all_passed() ? 0 : 1;
}

int run_report(const CommonArgs& args, bool with_reference) {
    const BoardSpec board = resolve_board(args.board);
    const TuningConfig tuning = tuning_from_args(args);
    const SuiteOptions opts = options_from_args(args);
    ReportDocument doc = run_suite(board, tuning, opts, args.seed);
    if (with_reference) doc = compare_with_reference(std::move(doc), reference_table());
    emit_document(doc, args);
    return doc.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Performance models and functional simulations of the HPCC FPGA benchmarks"};
    app.require_subcommand(1);

    CommonArgs args;
    CLI::App* model = app.add_subcommand("model", "Evaluate the analytic performance models");
    CLI::App* simulate = app.add_subcommand("simulate", "Run the functional kernel simulations");
    CLI::App* beff = app.add_subcommand("beff", "Run the ring-network simulation");
    CLI::App* report = app.add_subcommand("report", "Run the full suite and emit a report");
    CLI::App* compare =
        app.add_subcommand("compare", "Full suite joined with the published measurements");
    for (CLI::App* cmd : {model, simulate, beff, report, compare}) {
        add_common_options(cmd, args);
    }

    try {
        app.parse(argc, argv);
        if (model->parsed()) return run_model(args);
        if (simulate->parsed()) return run_simulate(args);
        if (beff->parsed()) return run_beff_cmd(args);
        if (report->parsed()) return run_report(args, false);
        if (compare->parsed()) return run_report(args, true);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
