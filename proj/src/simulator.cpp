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

#include "ohhc/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace ohhc {

std::string_view to_string(GatherPhase phase) {
    switch (phase) {
        case GatherPhase::None: return "none";
        case GatherPhase::InnerCell: return "inner_cell";
        case GatherPhase::Hypercube: return "hypercube";
        case GatherPhase::Optical: return "optical";
    }
    return "?";
}

std::string_view to_string(Engine engine) {
    return engine == Engine::Reference ? "reference" : "measure";
}

Engine parse_engine(std::string_view text) {
    if (text == "reference") return Engine::Reference;
    if (text == "measure") return Engine::Measure;
    throw std::invalid_argument("unknown engine: " + std::string(text));
}

int GatherPlan::height() const { return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end()); }

namespace {

std::int64_t lowest_set_bit(std::int64_t v) { return v & -v; }

bool is_linked(const OhhcTopology& topo, const NodeAddress& a, const NodeAddress& b, LinkKind kind) {
    if (kind == LinkKind::Optical) {
        const auto partner = topo.optical_partner(a);
        return partner && *partner == b;
    }
    const auto nbrs = topo.electronic_neighbors(a);
    return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

}  // namespace

GatherPlan build_gather_plan(const OhhcTopology& topo) {
    const OhhcConfig& cfg = topo.config();
    const auto n = static_cast<std::size_t>(topo.node_count());

    GatherPlan plan;
    plan.send_target.assign(n, GatherPlan::kNoTarget);
    plan.phase.assign(n, GatherPhase::None);

    for (const NodeAddress& v : topo.nodes()) {
        const auto g = v.group_id;
        const auto h = v.hhc_subgroup_id;
        NodeAddress target;
        GatherPhase phase = GatherPhase::InnerCell;
        switch (v.hhc_node_id) {
            case 3: target = make_address(g, h, 1, cfg); break;
            case 4: target = make_address(g, h, 2, cfg); break;
            case 1:
            case 2:
            case 5: target = make_address(g, h, 0, cfg); break;
            default:
                if (h > 0) {
                    target = make_address(g, h - lowest_set_bit(h), 0, cfg);
                    phase = GatherPhase::Hypercube;
                } else if (g > 0) {
                    target = address_in_group(0, g, cfg);
                    phase = GatherPhase::Optical;
                } else {
                    continue;  // master
                }
        }
        const auto kind = phase == GatherPhase::Optical ? LinkKind::Optical : LinkKind::Electronic;
        if (!is_linked(topo, v, target, kind))
            throw std::logic_error("gather edge " + std::to_string(v.flat_index) + "->" +
                                   std::to_string(target.flat_index) + " is not a network link");
        plan.send_target[v.flat_index] = target.flat_index;
        plan.phase[v.flat_index] = phase;
    }

    plan.depth.assign(n, -1);
    plan.depth[0] = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> chain;
        std::size_t u = v;
        while (plan.depth[u] < 0) {
            chain.push_back(u);
            if (chain.size() > n) throw std::logic_error("gather plan contains a cycle");
            const auto next = plan.send_target[u];
            if (next == GatherPlan::kNoTarget) throw std::logic_error("gather plan has a second root");
            u = static_cast<std::size_t>(next);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            plan.depth[*it] = plan.depth[static_cast<std::size_t>(plan.send_target[*it])] + 1;
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return plan.depth[a] > plan.depth[b]; });
    plan.wait_units.assign(n, 1);
    plan.children.assign(n, {});
    for (std::size_t v : order) {
        const auto t = plan.send_target[v];
        if (t == GatherPlan::kNoTarget) continue;
        plan.wait_units[static_cast<std::size_t>(t)] += plan.wait_units[v];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (plan.send_target[v] != GatherPlan::kNoTarget)
            plan.children[static_cast<std::size_t>(plan.send_target[v])].push_back(static_cast<std::int64_t>(v));
    }
    if (plan.wait_units[0] != topo.node_count()) throw std::logic_error("gather plan does not reach every node");
    return plan;
}

std::int64_t GroupZeroWaitRules::hypercube_step(std::int64_t vertex) const {
    if (vertex <= 0) throw std::invalid_argument("hypercube step applies to vertices > 0");
    return cell_head * lowest_set_bit(vertex);
}

GroupZeroWaitRules group_zero_wait_rules(const OhhcTopology& topo, const GatherPlan& plan) {
    const OhhcConfig& cfg = topo.config();
    // Units delivered by one non-zero group over its optical link.
    const std::int64_t group_payload = plan.wait(make_address(1, 0, 0, cfg));
    GroupZeroWaitRules rules;
    rules.normal = 1 + group_payload;
    rules.aggregate = 2 * rules.normal;
    rules.cell_head = 6 * rules.normal;
    rules.master_cell = rules.cell_head - group_payload;
    return rules;
}

std::int64_t count_comm_steps(const OhhcTopology& topo) {
    const OhhcConfig& cfg = topo.config();
    const std::int64_t g = cfg.group_count();
    // 3 steps from the cell head to its direct neighbours, 2 more to reach the
    // remaining pair, then 6 parallel links per extra hypercube dimension.
    const std::int64_t electronic_per_group = 5 + 6 * (cfg.dimension - 1);
    const std::int64_t optical = g - 1;
    const std::int64_t one_way = g * electronic_per_group + optical;
    return 2 * one_way;
}

void write_trace_line(std::ostream& out, const Message& m) {
    out << m.round << ',' << m.src << ',' << m.dst << ',' << to_string(m.kind) << ',' << m.units << ','
        << m.elements << '\n';
}

namespace {

void merge_into(PayloadChunk& left, PayloadChunk&& right) {
    if (left.bucket_hi + 1 != right.bucket_lo) throw std::logic_error("merging non-adjacent chunks");
    if (!left.values.empty() && !right.values.empty() && left.values.back() > right.values.front())
        throw std::logic_error("merged chunk would not be ascending at bucket " + std::to_string(right.bucket_lo));
    if (left.values.size() >= right.values.size()) {
        left.values.insert(left.values.end(), right.values.begin(), right.values.end());
    } else {
        right.values.insert(right.values.begin(), left.values.begin(), left.values.end());
        left.values = std::move(right.values);
    }
    left.bucket_hi = right.bucket_hi;
    left.unit_count += right.unit_count;
}

// Keeps `held` ordered by bucket range with adjacent ranges coalesced.
void absorb(std::vector<PayloadChunk>& held, PayloadChunk&& chunk) {
    auto pos = std::lower_bound(held.begin(), held.end(), chunk.bucket_lo,
                                [](const PayloadChunk& c, std::int64_t lo) { return c.bucket_lo < lo; });
    pos = held.insert(pos, std::move(chunk));
    if (pos + 1 != held.end() && pos->bucket_hi + 1 == (pos + 1)->bucket_lo) {
        merge_into(*pos, std::move(*(pos + 1)));
        held.erase(pos + 1);
    }
    if (pos != held.begin() && (pos - 1)->bucket_hi + 1 == pos->bucket_lo) {
        merge_into(*(pos - 1), std::move(*pos));
        held.erase(pos);
    }
}

std::vector<SortMetrics> sort_buckets(std::vector<std::vector<Value>>& buckets, const SimOptions& options,
                                      double& wall_ms) {
    std::vector<SortMetrics> metrics(buckets.size());
    const auto start = std::chrono::steady_clock::now();
    if (options.engine == Engine::Reference) {
        for (std::size_t b = 0; b < buckets.size(); ++b) metrics[b] = quicksort_in_place(buckets[b]);
        return metrics;
    }
    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t b = next++; b < buckets.size(); b = next++)
                    metrics[b] = quicksort_in_place(buckets[b]);
            });
        }
    }
    wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return metrics;
}

}  // namespace

SimReport run_parallel_sort(const OhhcTopology& topo, std::span<const Value> master, const SimOptions& options) {
    if (master.empty()) throw std::invalid_argument("cannot sort an empty array");
    const GatherPlan plan = build_gather_plan(topo);
    const std::int64_t n_nodes = topo.node_count();
    const auto n = static_cast<std::size_t>(n_nodes);

    SimReport report;
    report.config = topo.config();
    report.element_count = static_cast<std::int64_t>(master.size());
    report.comm_steps_total = count_comm_steps(topo);

    BucketSet set = split(master, n_nodes);
    auto& buckets = set.buckets;

    // Scatter: the master starts with every bucket; each round a node passes
    // every bucket that is not its own one hop down the tree toward its owner.
    // Tree paths: route[b] lists b's ancestors from b up to the master.
    std::vector<std::vector<std::int64_t>> route(n);
    for (std::size_t b = 0; b < n; ++b) {
        for (auto u = static_cast<std::int64_t>(b); u != GatherPlan::kNoTarget;
             u = plan.send_target[static_cast<std::size_t>(u)])
            route[b].push_back(u);
    }
    std::vector<std::vector<std::int64_t>> holding(n);
    holding[0].resize(n);
    std::iota(holding[0].begin(), holding[0].end(), 0);
    std::int64_t round = 0;
    for (;;) {
        std::vector<std::vector<std::int64_t>> arriving(n);
        std::vector<Message> sent;
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<std::int64_t> keep;
            // child flat index -> buckets routed through it
            std::vector<std::pair<std::int64_t, std::int64_t>> outgoing;
            for (std::int64_t b : holding[u]) {
                if (static_cast<std::size_t>(b) == u) {
                    keep.push_back(b);
                    continue;
                }
                const auto& path = route[static_cast<std::size_t>(b)];
                const auto hop = path[path.size() - 1 - static_cast<std::size_t>(plan.depth[u]) - 1];
                outgoing.emplace_back(hop, b);
            }
            std::stable_sort(outgoing.begin(), outgoing.end(),
                             [](const auto& l, const auto& r) { return l.first < r.first; });
            for (std::size_t i = 0; i < outgoing.size();) {
                Message m{round + 1, static_cast<std::int64_t>(u), outgoing[i].first,
                          plan.phase[static_cast<std::size_t>(outgoing[i].first)] == GatherPhase::Optical
                              ? LinkKind::Optical
                              : LinkKind::Electronic,
                          0, 0};
                for (; i < outgoing.size() && outgoing[i].first == m.dst; ++i) {
                    ++m.units;
                    m.elements += static_cast<std::int64_t>(buckets[static_cast<std::size_t>(outgoing[i].second)].size());
                    arriving[static_cast<std::size_t>(m.dst)].push_back(outgoing[i].second);
                }
                sent.push_back(m);
            }
            holding[u] = std::move(keep);
        }
        if (sent.empty()) break;
        ++round;
        for (std::size_t u = 0; u < n; ++u)
            holding[u].insert(holding[u].end(), arriving[u].begin(), arriving[u].end());
        report.messages.insert(report.messages.end(), sent.begin(), sent.end());
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (holding[u].size() != 1 || holding[u][0] != static_cast<std::int64_t>(u))
            throw std::logic_error("scatter did not deliver bucket " + std::to_string(u));
    }
    report.scatter_rounds = round;

    report.per_node_metrics = sort_buckets(buckets, options, report.sort_wall_ms);
    for (std::size_t b = 0; b < n; ++b) {
        const auto& m = report.per_node_metrics[b];
        report.totals += m;
        report.max_node_cost_units = std::max(report.max_node_cost_units, m.cost_units());
        report.max_bucket_size = std::max(report.max_bucket_size, static_cast<std::int64_t>(buckets[b].size()));
    }

    // Gather: a node forwards everything it holds once it holds exactly its
    // planned number of units. All sends of a round are delivered together.
    std::vector<std::vector<PayloadChunk>> held(n);
    std::vector<std::int64_t> units(n, 1);
    std::vector<bool> done(n, false);
    std::vector<int> bucket_hops(n, 0);
    for (std::size_t b = 0; b < n; ++b)
        held[b].push_back(PayloadChunk{static_cast<std::int64_t>(b), static_cast<std::int64_t>(b), 1,
                                       std::move(buckets[b])});

    const std::int64_t gather_start = round;
    for (;;) {
        std::vector<std::size_t> ready;
        for (std::size_t u = 0; u < n; ++u) {
            if (!done[u] && plan.send_target[u] != GatherPlan::kNoTarget && units[u] == plan.wait_units[u])
                ready.push_back(u);
            if (units[u] > plan.wait_units[u]) throw std::logic_error("node received more units than planned");
        }
        if (ready.empty()) break;
        ++round;
        std::vector<std::pair<std::size_t, std::vector<PayloadChunk>>> in_flight;
        for (std::size_t u : ready) {
            const auto dst = static_cast<std::size_t>(plan.send_target[u]);
            Message m{round, static_cast<std::int64_t>(u), static_cast<std::int64_t>(dst),
                      plan.phase[u] == GatherPhase::Optical ? LinkKind::Optical : LinkKind::Electronic,
                      units[u], 0};
            for (const auto& chunk : held[u]) {
                m.elements += static_cast<std::int64_t>(chunk.values.size());
                for (auto b = chunk.bucket_lo; b <= chunk.bucket_hi; ++b) ++bucket_hops[static_cast<std::size_t>(b)];
            }
            report.messages.push_back(m);
            in_flight.emplace_back(dst, std::move(held[u]));
            held[u].clear();
            units[dst] += units[u];
            units[u] = 0;
            done[u] = true;
        }
        for (auto& [dst, chunks] : in_flight)
            for (auto& c : chunks) absorb(held[dst], std::move(c));
        if (std::accumulate(units.begin(), units.end(), std::int64_t{0}) != n_nodes)
            throw std::logic_error("unit count not conserved in round " + std::to_string(round));
    }
    report.gather_rounds = round - gather_start;
    report.parallel_rounds = report.scatter_rounds + report.gather_rounds;
    report.messages_sent = static_cast<std::int64_t>(report.messages.size());
    report.max_message_hops = *std::max_element(bucket_hops.begin(), bucket_hops.end());

    report.gather_units_at_master = units[0];
    if (units[0] != n_nodes || held[0].size() != 1 || held[0][0].bucket_lo != 0 ||
        held[0][0].bucket_hi != n_nodes - 1 || held[0][0].unit_count != n_nodes)
        throw std::logic_error("gather stalled before the master held every bucket");
    report.output = std::move(held[0][0].values);
    return report;
}

}  // namespace ohhc
