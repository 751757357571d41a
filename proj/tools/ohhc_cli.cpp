// Copyright 2026 The OHHC Sort Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// ohhc: simulated parallel Quick Sort on the OTIS Hyper Hexa-Cell network.
//
//   ohhc --dimension 1 --mode full --dist sorted --count 100000 --seed 7
//   ohhc sweep --sizes-mb 10,20 --out sweep.csv
//   ohhc topology --dimension 2 --mode half --out edges.txt

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ohhc/array_io.hpp"
#include "ohhc/experiment.hpp"

namespace {

using namespace ohhc;

constexpr const char* kOutDirEnv = "OHHC_OUT_DIR";

std::filesystem::path default_output(const std::string& stem) {
    const char* dir = std::getenv(kOutDirEnv);
    if (!dir || !*dir) return {};
    std::filesystem::create_directories(dir);
    return std::filesystem::path(dir) / stem;
}

void emit(const std::filesystem::path& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

const std::vector<std::string> kModes{"full", "half"};
const std::vector<std::string> kDists{"random", "sorted", "reversed", "local"};
const std::vector<std::string> kEngines{"reference", "measure"};
const std::vector<std::string> kFormats{"json", "csv"};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulated parallel Quick Sort on the OTIS Hyper Hexa-Cell (OHHC) network.\n"
                 "Without a subcommand, performs one run and writes its report."};
    app.set_version_flag("--version", "ohhc 1.0 (report schema " + std::to_string(kReportSchemaVersion) + ")");

    RunConfig run;
    std::string mode = "full", dist = "random", engine = "reference", format = "json";
    std::string trace_path, out_path, input_path, emit_array_path;
    app.add_option("--dimension", run.dimension, "OHHC dimension (>= 1)")->check(CLI::PositiveNumber);
    app.add_option("--mode", mode, "full: G = P, half: G = P/2")->check(CLI::IsMember(kModes));
    app.add_option("--dist", dist, "input distribution")->check(CLI::IsMember(kDists));
    app.add_option("--count", run.element_count, "number of elements")->check(CLI::PositiveNumber);
    app.add_option("--seed", run.seed, "generator seed");
    app.add_option("--lo", run.lo, "smallest generated value");
    app.add_option("--hi", run.hi, "largest generated value");
    app.add_option("--engine", engine, "reference: single-threaded; measure: sorts on worker threads")
        ->check(CLI::IsMember(kEngines));
    app.add_option("--workers", run.workers, "worker threads for the measure engine (0 = all cores)");
    app.add_option("--comm-weight", run.comm_weight, "cost units charged per communication step")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", format, "report format")->check(CLI::IsMember(kFormats));
    app.add_option("--trace", trace_path, "write one line per message to this file");
    app.add_option("--out", out_path, std::string("report file (default: $") + kOutDirEnv + " or stdout)");
    app.add_option("--input", input_path, "sort this array file instead of generating one (.bin = int64 LE)")
        ->check(CLI::ExistingFile);
    app.add_option("--emit-array", emit_array_path, "also write the input array to this file");

    auto* sweep_cmd = app.add_subcommand(
        "sweep",
        "Run a dimension x mode x distribution x size matrix and write one CSV row per cell.\n"
        "The default preset is 4 dimensions x 2 modes x 4 distributions x {10,20,30,40,50,60} MB\n"
        "(4 bytes per element): 192 cells, each compared against its own sequential baseline.");
    SweepSpec sweep = default_sweep_preset();
    std::vector<std::string> sweep_modes, sweep_dists;
    std::string sweep_engine = "reference";
    std::vector<std::int64_t> sizes_mb;
    std::vector<std::int64_t> counts;
    std::string sweep_out, baseline_out;
    sweep_cmd->add_option("--dims", sweep.dimensions, "dimensions")->delimiter(',')->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--modes", sweep_modes, "group modes")->delimiter(',')->check(CLI::IsMember(kModes));
    sweep_cmd->add_option("--dists", sweep_dists, "distributions")->delimiter(',')->check(CLI::IsMember(kDists));
    auto* mb_opt = sweep_cmd->add_option("--sizes-mb", sizes_mb, "array sizes in MB")->delimiter(',');
    sweep_cmd->add_option("--counts", counts, "array sizes as element counts")->delimiter(',')->excludes(mb_opt);
    sweep_cmd->add_option("--seed", sweep.seed, "generator seed shared by every cell");
    sweep_cmd->add_option("--engine", sweep_engine, "engine")->check(CLI::IsMember(kEngines));
    sweep_cmd->add_option("--comm-weight", sweep.comm_weight, "cost units per communication step")
        ->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--jobs", sweep.jobs, "cells run concurrently")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", sweep_out, std::string("CSV file (default: $") + kOutDirEnv + " or stdout)");
    sweep_cmd->add_option("--baseline-out", baseline_out, "CSV of the sequential baselines");

    auto* topo_cmd = app.add_subcommand("topology", "Export the network as an edge list: `E|O <flat_a> <flat_b>`");
    OhhcConfig topo_config;
    std::string topo_mode = "full", topo_out;
    bool topo_stats = false;
    topo_cmd->add_option("--dimension", topo_config.dimension, "OHHC dimension (>= 1)")
        ->check(CLI::PositiveNumber);
    topo_cmd->add_option("--mode", topo_mode, "full or half")->check(CLI::IsMember(kModes));
    topo_cmd->add_option("--out", topo_out, "edge list file (default: stdout)");
    topo_cmd->add_flag("--stats", topo_stats, "print counts and BFS diameters to stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep_cmd) {
            if (!sweep_modes.empty()) {
                sweep.modes.clear();
                for (const auto& m : sweep_modes) sweep.modes.push_back(parse_group_mode(m));
            }
            if (!sweep_dists.empty()) {
                sweep.distributions.clear();
                for (const auto& d : sweep_dists) sweep.distributions.push_back(parse_distribution(d));
            }
            sweep.engine = parse_engine(sweep_engine);
            if (!counts.empty()) sweep.element_counts = counts;
            if (!sizes_mb.empty()) {
                sweep.element_counts.clear();
                for (auto mb : sizes_mb) sweep.element_counts.push_back(megabytes_to_elements(mb));
            }
            std::size_t failed = 0;
            const auto rows = run_sweep(sweep, [&](const SweepRow& row) {
                if (!row.summary) ++failed;
                std::cerr << "cell " << row.cell + 1 << "/" << sweep.cell_count() << ": "
                          << (row.summary ? "ok" : "error: " + row.error) << '\n';
            });
            std::ostringstream csv;
            write_sweep_csv(csv, rows);
            emit(sweep_out.empty() ? default_output("ohhc_sweep.csv") : std::filesystem::path(sweep_out), csv.str());
            if (!baseline_out.empty()) {
                std::ostringstream base;
                write_baseline_csv(base, rows);
                emit(baseline_out, base.str());
            }
            return failed == 0 ? 0 : 1;
        }

        if (*topo_cmd) {
            topo_config.group_mode = parse_group_mode(topo_mode);
            const OhhcTopology topo(topo_config);
            std::ostringstream edges;
            topo.write_edge_list(edges);
            emit(topo_out, edges.str());
            if (topo_stats) {
                std::cerr << "groups " << topo.group_count() << ", processors/group " << topo.processors_per_group()
                          << ", nodes " << topo.node_count() << ", electronic edges " << topo.electronic_edges().size()
                          << ", optical edges " << topo.optical_edges().size() << ", group diameter "
                          << topo.diameter(true) << ", network diameter " << topo.diameter(false) << '\n';
            }
            return 0;
        }

        run.mode = parse_group_mode(mode);
        run.distribution = parse_distribution(dist);
        run.engine = parse_engine(engine);
        const ReportFormat report_format = parse_report_format(format);
        if (!input_path.empty()) run.input_path = input_path;
        run.validate();
        if (!emit_array_path.empty()) {
            if (run.input_path) throw std::invalid_argument("--emit-array cannot be combined with --input");
            write_array(emit_array_path, generate(DistributionSpec{run.distribution, run.element_count, run.seed,
                                                                   run.lo, run.hi, run.topology().node_count()}));
        }
        const RunResult result = execute(run);
        const std::string text = report_format == ReportFormat::Json
                                     ? render_json(result)
                                     : csv_header() + "\n" + csv_row(0, result.summary) + "\n";
        if (!trace_path.empty()) {
            std::ofstream trace(trace_path, std::ios::trunc);
            if (!trace) throw std::runtime_error("cannot write " + trace_path);
            write_trace(trace, result);
        }
        std::filesystem::path out = out_path;
        if (out.empty()) {
            std::ostringstream stem;
            stem << "ohhc_d" << run.dimension << '_' << to_string(run.mode) << '_'
                 << (run.input_path ? "file" : to_string(run.distribution)) << '_' << result.summary.element_count
                 << "_s" << run.seed << '.' << format;
            out = default_output(stem.str());
        }
        emit(out, text);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ohhc: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ohhc: " << e.what() << '\n';
        return 1;
    }
}
