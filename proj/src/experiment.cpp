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

#include "ohhc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "ohhc/analytics.hpp"
#include "ohhc/array_io.hpp"

namespace ohhc {

std::string_view to_string(ReportFormat format) { return format == ReportFormat::Json ? "json" : "csv"; }

ReportFormat parse_report_format(std::string_view text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format: " + std::string(text));
}

void RunConfig::validate() const {
    topology().validate();
    if (!input_path) {
        if (element_count <= 0) throw std::invalid_argument("element count must be positive");
        if (lo > hi) throw std::invalid_argument("value range is empty (lo > hi)");
    }
    if (comm_weight < 0) throw std::invalid_argument("comm weight must be >= 0");
    if (engine == Engine::Reference && workers != 0)
        throw std::invalid_argument("worker count only applies to the measure engine");
}

double parallel_cost(std::uint64_t max_node_cost_units, std::int64_t comm_steps, double comm_weight) {
    return static_cast<double>(max_node_cost_units) + comm_weight * static_cast<double>(comm_steps);
}

RunResult execute(const RunConfig& config) {
    config.validate();
    const OhhcTopology topo(config.topology());

    std::vector<Value> master;
    if (config.input_path) {
        master = read_array(*config.input_path);
        if (master.empty()) throw std::invalid_argument("input file holds no values");
    } else {
        master = generate(DistributionSpec{config.distribution, config.element_count, config.seed, config.lo,
                                           config.hi, topo.node_count()});
    }

    const bool timed = config.engine == Engine::Measure;
    BaselineResult baseline = sequential_baseline(master, timed);
    SimReport sim = run_parallel_sort(topo, master, SimOptions{config.engine, config.workers});

    RunSummary s;
    s.config = config;
    s.element_count = static_cast<std::int64_t>(master.size());
    s.groups = topo.group_count();
    s.processors_per_group = topo.processors_per_group();
    s.nodes = topo.node_count();
    s.group_diameter = topo.diameter(true);
    s.comm_steps_total = sim.comm_steps_total;
    s.comm_steps_formula = analytics::comm_steps_formula(s.groups, config.dimension);
    s.messages_sent = sim.messages_sent;
    s.scatter_rounds = sim.scatter_rounds;
    s.gather_rounds = sim.gather_rounds;
    s.parallel_rounds = sim.parallel_rounds;
    s.max_message_hops = sim.max_message_hops;
    s.path_links = analytics::path_links(config.dimension);
    s.gather_units_at_master = sim.gather_units_at_master;
    s.max_bucket_size = sim.max_bucket_size;
    s.output_matches_baseline = sim.output == baseline.sorted;
    s.totals = sim.totals;
    s.baseline = baseline.metrics;
    s.baseline_cost_units = baseline.cost_units;
    s.max_node_cost_units = sim.max_node_cost_units;
    s.parallel_cost_units = parallel_cost(sim.max_node_cost_units, sim.comm_steps_total, config.comm_weight);
    const auto n = static_cast<double>(s.element_count);
    const auto nodes = static_cast<double>(s.nodes);
    if (s.parallel_cost_units > 0) {
        s.measured_speedup = analytics::measured_speedup(static_cast<double>(baseline.cost_units), s.parallel_cost_units);
        s.measured_efficiency = analytics::measured_efficiency(s.measured_speedup, nodes);
    }
    if (n >= nodes) s.parallel_time_model = analytics::parallel_time_model(n, nodes);
    if (nodes < n) {
        s.speedup_model = analytics::speedup_model(n, nodes);
        s.efficiency_model = analytics::efficiency_model(n, nodes);
    }
    s.message_delay_average = analytics::message_delay_model(n / nodes, config.dimension, false, n);
    s.message_delay_worst = analytics::message_delay_model(n / nodes, config.dimension, true, n);
    if (timed) {
        s.baseline_wall_ms = baseline.wall_ms;
        s.parallel_sort_wall_ms = sim.sort_wall_ms;
    }

    return RunResult{std::move(s), std::move(sim.per_node_metrics), std::move(sim.messages)};
}

namespace {

nlohmann::ordered_json metrics_json(const SortMetrics& m) {
    return {{"recursion_calls", m.recursion_calls},
            {"iterations", m.iterations},
            {"swaps", m.swaps},
            {"comparisons", m.comparisons}};
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string fixed(double v) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << v;
    return out.str();
}

}  // namespace

std::string render_json(const RunResult& result) {
    const RunSummary& s = result.summary;
    const RunConfig& c = s.config;
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["config"] = {{"dimension", c.dimension},
                   {"mode", to_string(c.mode)},
                   {"distribution", c.input_path ? "file" : to_string(c.distribution)},
                   {"element_count", s.element_count},
                   {"seed", c.seed},
                   {"value_range", {c.lo, c.hi}},
                   {"engine", to_string(c.engine)},
                   {"comm_weight", c.comm_weight}};
    j["topology"] = {{"groups", s.groups},
                     {"processors_per_group", s.processors_per_group},
                     {"nodes", s.nodes},
                     {"group_diameter", s.group_diameter}};
    j["simulation"] = {{"comm_steps_total", s.comm_steps_total},
                       {"messages_sent", s.messages_sent},
                       {"scatter_rounds", s.scatter_rounds},
                       {"gather_rounds", s.gather_rounds},
                       {"parallel_rounds", s.parallel_rounds},
                       {"max_message_hops", s.max_message_hops},
                       {"gather_units_at_master", s.gather_units_at_master},
                       {"max_bucket_size", s.max_bucket_size},
                       {"max_node_cost_units", s.max_node_cost_units},
                       {"output_matches_baseline", s.output_matches_baseline},
                       {"totals", metrics_json(s.totals)}};
    j["baseline"] = {{"metrics", metrics_json(s.baseline)}, {"cost_units", s.baseline_cost_units}};
    j["analytics"] = {{"comm_steps_formula", s.comm_steps_formula},
                      {"comm_steps_match", s.comm_steps_formula == s.comm_steps_total},
                      {"path_links", s.path_links},
                      {"hops_within_bound", s.max_message_hops <= s.path_links},
                      {"parallel_time_model", s.parallel_time_model},
                      {"speedup_model", optional_json(s.speedup_model)},
                      {"efficiency_model", optional_json(s.efficiency_model)},
                      {"message_delay_average", s.message_delay_average},
                      {"message_delay_worst", s.message_delay_worst},
                      {"parallel_cost_units", s.parallel_cost_units},
                      {"measured_speedup", s.measured_speedup},
                      {"measured_efficiency", s.measured_efficiency}};
    if (c.engine == Engine::Measure) {
        j["timing"] = {{"baseline_wall_ms", optional_json(s.baseline_wall_ms)},
                       {"parallel_sort_wall_ms", optional_json(s.parallel_sort_wall_ms)}};
    }
    auto& per_node = j["per_node"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.per_node_metrics.size(); ++i) {
        auto entry = metrics_json(result.per_node_metrics[i]);
        entry["flat_index"] = i;
        per_node.push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

std::string csv_header() {
    return "cell,status,dimension,mode,distribution,element_count,seed,engine,groups,nodes,"
           "comm_steps_total,comm_steps_formula,messages_sent,parallel_rounds,max_message_hops,path_links,"
           "gather_units_at_master,max_bucket_size,recursion_calls,iterations,swaps,comparisons,"
           "baseline_cost_units,max_node_cost_units,parallel_cost_units,measured_speedup,measured_efficiency,"
           "speedup_model,efficiency_model,output_matches_baseline";
}

std::string csv_row(std::int64_t cell, const RunSummary& s) {
    const RunConfig& c = s.config;
    std::ostringstream out;
    out << cell << ",ok," << c.dimension << ',' << to_string(c.mode) << ','
        << (c.input_path ? "file" : to_string(c.distribution)) << ',' << s.element_count << ',' << c.seed << ','
        << to_string(c.engine) << ',' << s.groups << ',' << s.nodes << ',' << s.comm_steps_total << ','
        << s.comm_steps_formula << ',' << s.messages_sent << ',' << s.parallel_rounds << ',' << s.max_message_hops
        << ',' << s.path_links << ',' << s.gather_units_at_master << ',' << s.max_bucket_size << ','
        << s.totals.recursion_calls << ',' << s.totals.iterations << ',' << s.totals.swaps << ','
        << s.totals.comparisons << ',' << s.baseline_cost_units << ',' << s.max_node_cost_units << ','
        << fixed(s.parallel_cost_units) << ',' << fixed(s.measured_speedup) << ','
        << fixed(s.measured_efficiency) << ',' << (s.speedup_model ? fixed(*s.speedup_model) : "") << ','
        << (s.efficiency_model ? fixed(*s.efficiency_model) : "") << ','
        << (s.output_matches_baseline ? "true" : "false");
    return out.str();
}

void write_trace(std::ostream& out, const RunResult& result) {
    for (const auto& m : result.messages) write_trace_line(out, m);
}

RunConfig SweepSpec::cell(std::size_t index) const {
    if (index >= cell_count()) throw std::out_of_range("sweep cell index out of range");
    RunConfig c;
    c.element_count = element_counts[index % element_counts.size()];
    index /= element_counts.size();
    c.distribution = distributions[index % distributions.size()];
    index /= distributions.size();
    c.mode = modes[index % modes.size()];
    index /= modes.size();
    c.dimension = dimensions[index];
    c.seed = seed;
    c.engine = engine;
    c.comm_weight = comm_weight;
    return c;
}

SweepSpec default_sweep_preset() {
    SweepSpec spec;
    for (std::int64_t mb : {10, 20, 30, 40, 50, 60}) spec.element_counts.push_back(megabytes_to_elements(mb));
    return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const std::function<void(const SweepRow&)>& on_row) {
    const std::size_t cells = spec.cell_count();
    if (cells == 0) throw std::invalid_argument("sweep matrix is empty");
    std::vector<SweepRow> rows(cells);
    std::atomic<std::size_t> next{0};
    std::mutex report_mutex;

    auto work = [&] {
        for (std::size_t i = next++; i < cells; i = next++) {
            SweepRow row;
            row.cell = i;
            try {
                row.config = spec.cell(i);
                row.summary = execute(row.config).summary;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            std::lock_guard lock(report_mutex);
            rows[i] = std::move(row);
            if (on_row) on_row(rows[i]);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(cells)));
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << csv_header() << ",error\n";
    for (const auto& row : rows) {
        if (row.summary) {
            out << csv_row(static_cast<std::int64_t>(row.cell), *row.summary) << ",\n";
            continue;
        }
        const RunConfig& c = row.config;
        std::string error = row.error;
        std::replace(error.begin(), error.end(), ',', ';');
        std::replace(error.begin(), error.end(), '\n', ' ');
        out << row.cell << ",error," << c.dimension << ',' << to_string(c.mode) << ',' << to_string(c.distribution)
            << ',' << c.element_count << ',' << c.seed << ',' << to_string(c.engine)
            << std::string(23, ',') << error << '\n';
    }
}

void write_baseline_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    // Local inputs depend on the segment (processor) count, so they are keyed by it too.
    std::map<std::tuple<int, std::int64_t, std::int64_t>, const RunSummary*> seen;
    for (const auto& row : rows) {
        if (!row.summary) continue;
        const auto& s = *row.summary;
        const auto segments = s.config.distribution == Distribution::Local ? s.nodes : 0;
        seen.emplace(std::tuple{static_cast<int>(s.config.distribution), s.element_count, segments}, &s);
    }
    out << "distribution,element_count,segments,seed,recursion_calls,iterations,swaps,comparisons,cost_units\n";
    for (const auto& [key, s] : seen) {
        out << to_string(s->config.distribution) << ',' << s->element_count << ',' << std::get<2>(key) << ','
            << s->config.seed << ',' << s->baseline.recursion_calls << ',' << s->baseline.iterations << ','
            << s->baseline.swaps << ',' << s->baseline.comparisons << ',' << s->baseline_cost_units << '\n';
    }
}

}  // namespace ohhc
