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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohhc/partition.hpp"
#include "ohhc/quicksort.hpp"
#include "ohhc/simulator.hpp"
#include "ohhc/topology.hpp"

namespace ohhc {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Json, Csv };

std::string_view to_string(ReportFormat format);
ReportFormat parse_report_format(std::string_view text);

/// Everything that determines one simulated run. With the Reference engine
/// two runs of equal configs produce identical reports.
struct RunConfig {
    int dimension = 1;
    GroupMode mode = GroupMode::Full;
    Distribution distribution = Distribution::Random;
    std::int64_t element_count = 100'000;
    std::uint64_t seed = 1;
    Value lo = 0;
    Value hi = 1'000'000'000;
    Engine engine = Engine::Reference;
    unsigned workers = 0;
    // Cost units charged per communication step when forming the modeled
    // parallel time. 0 keeps the comparison purely on sort work.
    double comm_weight = 0.0;
    // Sort this file instead of generating an array.
    std::optional<std::filesystem::path> input_path;

    /// Throws std::invalid_argument on an unusable combination.
    void validate() const;
    OhhcConfig topology() const { return {dimension, mode}; }
};

/// Scalar outcome of one run; what the reports and sweep rows are built from.
struct RunSummary {
    RunConfig config;
    std::int64_t element_count = 0;
    std::int64_t groups = 0;
    std::int64_t processors_per_group = 0;
    std::int64_t nodes = 0;
    int group_diameter = 0;

    std::int64_t comm_steps_total = 0;
    std::int64_t comm_steps_formula = 0;
    std::int64_t messages_sent = 0;
    std::int64_t scatter_rounds = 0;
    std::int64_t gather_rounds = 0;
    std::int64_t parallel_rounds = 0;
    int max_message_hops = 0;
    std::int64_t path_links = 0;
    std::int64_t gather_units_at_master = 0;
    std::int64_t max_bucket_size = 0;
    bool output_matches_baseline = false;

    SortMetrics totals;
    SortMetrics baseline;
    std::uint64_t baseline_cost_units = 0;
    std::uint64_t max_node_cost_units = 0;
    double parallel_cost_units = 0.0;
    double measured_speedup = 0.0;
    double measured_efficiency = 0.0;

    // closed-form counterparts; speedup/efficiency are absent when P >= n
    double parallel_time_model = 0.0;
    std::optional<double> speedup_model;
    std::optional<double> efficiency_model;
    double message_delay_average = 0.0;
    double message_delay_worst = 0.0;

    // Measure engine only
    std::optional<double> baseline_wall_ms;
    std::optional<double> parallel_sort_wall_ms;
};

struct RunResult {
    RunSummary summary;
    std::vector<SortMetrics> per_node_metrics;
    std::vector<Message> messages;
};

/// Generates (or loads) the input, runs the sequential baseline and the
/// simulated parallel sort, and compares them.
RunResult execute(const RunConfig& config);

/// Modeled parallel time in cost units: the slowest node's sort work plus
/// comm_weight per communication step.
double parallel_cost(std::uint64_t max_node_cost_units, std::int64_t comm_steps, double comm_weight);

std::string render_json(const RunResult& result);
std::string csv_header();
std::string csv_row(std::int64_t cell, const RunSummary& summary);
void write_trace(std::ostream& out, const RunResult& result);

/// Element count of a preset size at 4 bytes per element.
inline std::int64_t megabytes_to_elements(std::int64_t megabytes) { return megabytes * 1024 * 1024 / 4; }

struct SweepSpec {
    std::vector<int> dimensions{1, 2, 3, 4};
    std::vector<GroupMode> modes{GroupMode::Full, GroupMode::Half};
    std::vector<Distribution> distributions{Distribution::Random, Distribution::Sorted,
                                            Distribution::ReversedSorted, Distribution::Local};
    std::vector<std::int64_t> element_counts;
    std::uint64_t seed = 1;
    Engine engine = Engine::Reference;
    double comm_weight = 0.0;
    unsigned jobs = 1;

    std::size_t cell_count() const {
        return dimensions.size() * modes.size() * distributions.size() * element_counts.size();
    }
    /// Cell i in dimension-major order (dimension, mode, distribution, size).
    RunConfig cell(std::size_t index) const;
};

/// 4 dimensions x 2 modes x 4 distributions x {10..60} MB.
SweepSpec default_sweep_preset();

struct SweepRow {
    std::size_t cell = 0;
    RunConfig config;
    std::optional<RunSummary> summary;
    std::string error;
};

/// Runs every cell; a failing cell yields a row with `error` set and the
/// sweep continues. Rows are returned in cell order. on_row is called as
/// rows complete (possibly out of order, never concurrently).
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const std::function<void(const SweepRow&)>& on_row = {});

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// One row per (distribution, size) with the sequential sort counters.
void write_baseline_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace ohhc
