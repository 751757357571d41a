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
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "ohhc/partition.hpp"
#include "ohhc/quicksort.hpp"
#include "ohhc/topology.hpp"

namespace ohhc {

/// Which accumulation step an edge of the gather forest belongs to.
enum class GatherPhase {
    None,       // master: never sends
    InnerCell,  // cell positions 1..5 toward position 0
    Hypercube,  // cell heads toward hypercube vertex 0
    Optical,    // group heads toward group 0
};

std::string_view to_string(GatherPhase phase);

/// Static wait/send rules of the gather. The send edges form a tree rooted
/// at the master (flat index 0); wait_units[v] is the number of buckets that
/// must be held at v (its own included) before v forwards them.
struct GatherPlan {
    static constexpr std::int64_t kNoTarget = -1;

    std::vector<std::int64_t> wait_units;
    std::vector<std::int64_t> send_target;
    std::vector<GatherPhase> phase;
    std::vector<int> depth;  // hops from the node to the master along the tree
    std::vector<std::vector<std::int64_t>> children;

    std::int64_t wait(const NodeAddress& addr) const {
        return wait_units[static_cast<std::size_t>(addr.flat_index)];
    }
    int height() const;
};

GatherPlan build_gather_plan(const OhhcTopology& topo);

/// Wait constants of group 0 in closed form, with every constant taken from
/// subtree sums of the plan: a group-0 node that receives a whole group over
/// its optical link holds `normal` units, a cell position fed by one such
/// node holds `aggregate`, a cell made of such nodes holds `cell_head`, and
/// the master's own cell (whose head has no optical partner) holds
/// `master_cell`. hypercube_step(h) is what a group-0 cell head at hypercube
/// vertex h waits for.
struct GroupZeroWaitRules {
    std::int64_t normal = 0;
    std::int64_t aggregate = 0;
    std::int64_t cell_head = 0;
    std::int64_t master_cell = 0;

    std::int64_t hypercube_step(std::int64_t vertex) const;
};

GroupZeroWaitRules group_zero_wait_rules(const OhhcTopology& topo, const GatherPlan& plan);

/// Communication step count of a distribute-and-collect run, summed
/// sequentially: per group 5 cell steps plus 6 per hypercube dimension, G-1
/// optical steps, all doubled for the return trip. Equals 12*G*d - 2.
std::int64_t count_comm_steps(const OhhcTopology& topo);

/// A sorted run covering buckets [bucket_lo, bucket_hi].
struct PayloadChunk {
    std::int64_t bucket_lo = 0;
    std::int64_t bucket_hi = 0;
    std::int64_t unit_count = 1;
    std::vector<Value> values;
};

struct Message {
    std::int64_t round = 0;
    std::int64_t src = 0;
    std::int64_t dst = 0;
    LinkKind kind = LinkKind::Electronic;
    std::int64_t units = 0;
    std::int64_t elements = 0;
};

/// "round,src_flat,dst_flat,edge_kind,units,elements"
void write_trace_line(std::ostream& out, const Message& m);

enum class Engine { Reference, Measure };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view text);

struct SimOptions {
    Engine engine = Engine::Reference;
    unsigned workers = 0;  // Measure only; 0 picks hardware_concurrency
};

struct SimReport {
    OhhcConfig config;
    std::int64_t element_count = 0;

    std::int64_t comm_steps_total = 0;  // sequential accounting, see count_comm_steps
    std::int64_t messages_sent = 0;     // scatter + gather messages actually simulated
    std::int64_t scatter_rounds = 0;
    std::int64_t gather_rounds = 0;
    std::int64_t parallel_rounds = 0;
    int max_message_hops = 0;
    std::int64_t gather_units_at_master = 0;

    std::vector<SortMetrics> per_node_metrics;  // by flat index
    SortMetrics totals;
    std::uint64_t max_node_cost_units = 0;
    std::int64_t max_bucket_size = 0;
    double sort_wall_ms = 0.0;  // Measure engine only

    std::vector<Message> messages;  // scatter first, then gather
    std::vector<Value> output;      // master's final concatenation
};

/// Full run: split into N buckets, scatter bucket b to flat node b along the
/// reversed gather tree, sort every bucket, then gather with the plan's wait
/// rules in synchronous rounds. Throws std::invalid_argument on an empty
/// array; throws std::logic_error if a conservation or ordering check fails.
SimReport run_parallel_sort(const OhhcTopology& topo, std::span<const Value> master,
                            const SimOptions& options = {});

inline int max_hops(const SimReport& report) { return report.max_message_hops; }

}  // namespace ohhc
