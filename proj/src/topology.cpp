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

#include "ohhc/topology.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ohhc {

std::string_view to_string(GroupMode mode) { return mode == GroupMode::Full ? "full" : "half"; }

GroupMode parse_group_mode(std::string_view text) {
    if (text == "full") return GroupMode::Full;
    if (text == "half") return GroupMode::Half;
    throw std::invalid_argument("unknown group mode: " + std::string(text));
}

std::string_view to_string(LinkKind kind) {
    return kind == LinkKind::Electronic ? "electronic" : "optical";
}

void OhhcConfig::validate() const {
    if (dimension < 1) throw std::invalid_argument("OHHC dimension must be >= 1");
    // N = G * P grows as 4^d; 24 keeps every derived count well inside int64.
    if (dimension > 24) throw std::invalid_argument("OHHC dimension too large");
}

NodeAddress resolve(std::int64_t flat_index, const OhhcConfig& config) {
    config.validate();
    if (flat_index < 0 || flat_index >= config.node_count())
        throw std::out_of_range("flat index " + std::to_string(flat_index) + " outside [0, " +
                                std::to_string(config.node_count()) + ")");
    const std::int64_t p = config.processors_per_group();
    NodeAddress addr;
    addr.flat_index = flat_index;
    addr.group_id = flat_index / p;
    const std::int64_t w = flat_index % p;
    addr.hhc_subgroup_id = w / 6;
    addr.hhc_node_id = static_cast<int>(w % 6);
    return addr;
}

NodeAddress make_address(std::int64_t group_id, std::int64_t hhc_subgroup_id, int hhc_node_id,
                         const OhhcConfig& config) {
    config.validate();
    if (group_id < 0 || group_id >= config.group_count() || hhc_subgroup_id < 0 ||
        hhc_subgroup_id >= config.cube_vertices() || hhc_node_id < 0 || hhc_node_id >= 6)
        throw std::out_of_range("node coordinates outside the network");
    NodeAddress addr{group_id, hhc_subgroup_id, hhc_node_id, 0};
    addr.flat_index = group_id * config.processors_per_group() + addr.within_group_index();
    return addr;
}

NodeAddress address_in_group(std::int64_t group_id, std::int64_t within_group_index,
                             const OhhcConfig& config) {
    if (within_group_index < 0 || within_group_index >= config.processors_per_group())
        throw std::out_of_range("within-group index outside the group");
    return make_address(group_id, within_group_index / 6, static_cast<int>(within_group_index % 6),
                        config);
}

OhhcTopology::OhhcTopology(const OhhcConfig& config) : config_(config) {
    config_.validate();
    const std::int64_t n = config_.node_count();
    const std::int64_t p = config_.processors_per_group();
    const std::int64_t g = config_.group_count();
    const std::int64_t vertices = config_.cube_vertices();

    nodes_.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) nodes_.push_back(resolve(i, config_));

    electronic_adjacency_.assign(static_cast<std::size_t>(n), {});
    optical_adjacency_.assign(static_cast<std::size_t>(n), -1);

    auto add_electronic = [&](std::int64_t a, std::int64_t b) {
        electronic_.push_back({nodes_[a], nodes_[b], LinkKind::Electronic});
        electronic_adjacency_[a].push_back(b);
        electronic_adjacency_[b].push_back(a);
    };

    for (std::int64_t group = 0; group < g; ++group) {
        const std::int64_t base = group * p;
        for (std::int64_t h = 0; h < vertices; ++h) {
            for (const auto& edge : kCellEdges)
                add_electronic(base + 6 * h + edge[0], base + 6 * h + edge[1]);
        }
        // Hypercube links are replicated for each of the six cell positions.
        for (std::int64_t h = 0; h < vertices; ++h) {
            for (int bit = 0; bit < config_.dimension - 1; ++bit) {
                const std::int64_t other = h ^ (std::int64_t{1} << bit);
                if (other < h) continue;
                for (int k = 0; k < 6; ++k) add_electronic(base + 6 * h + k, base + 6 * other + k);
            }
        }
    }

    // Transpose rule: (group y, index x) <-> (group x, index y). In Half mode
    // only indices below G have a partner group.
    for (std::int64_t group = 0; group < g; ++group) {
        for (std::int64_t w = group + 1; w < std::min(p, g); ++w) {
            const std::int64_t a = group * p + w;
            const std::int64_t b = w * p + group;
            optical_.push_back({nodes_[a], nodes_[b], LinkKind::Optical});
            optical_adjacency_[a] = b;
            optical_adjacency_[b] = a;
        }
    }
}

const NodeAddress& OhhcTopology::node(std::int64_t flat_index) const {
    if (flat_index < 0 || flat_index >= node_count())
        throw std::out_of_range("flat index " + std::to_string(flat_index) + " not in topology");
    return nodes_[static_cast<std::size_t>(flat_index)];
}

void OhhcTopology::check(const NodeAddress& addr) const {
    if (addr.flat_index < 0 || addr.flat_index >= node_count() ||
        nodes_[static_cast<std::size_t>(addr.flat_index)] != addr)
        throw std::out_of_range("address not in topology");
}

std::vector<NodeAddress> OhhcTopology::electronic_neighbors(const NodeAddress& addr) const {
    check(addr);
    std::vector<NodeAddress> out;
    for (std::int64_t v : electronic_adjacency_[static_cast<std::size_t>(addr.flat_index)])
        out.push_back(nodes_[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end(),
              [](const NodeAddress& l, const NodeAddress& r) { return l.flat_index < r.flat_index; });
    return out;
}

std::optional<NodeAddress> OhhcTopology::optical_partner(const NodeAddress& addr) const {
    check(addr);
    const std::int64_t partner = optical_adjacency_[static_cast<std::size_t>(addr.flat_index)];
    if (partner < 0) return std::nullopt;
    return nodes_[static_cast<std::size_t>(partner)];
}

int OhhcTopology::eccentricity(std::int64_t source, bool group_only) const {
    const std::int64_t p = processors_per_group();
    std::vector<int> dist(static_cast<std::size_t>(node_count()), -1);
    std::deque<std::int64_t> queue{source};
    dist[source] = 0;
    int far = 0;
    while (!queue.empty()) {
        const std::int64_t u = queue.front();
        queue.pop_front();
        far = std::max(far, dist[u]);
        auto visit = [&](std::int64_t v) {
            if (dist[v] >= 0) return;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        };
        for (std::int64_t v : electronic_adjacency_[u]) visit(v);
        if (!group_only && optical_adjacency_[u] >= 0) visit(optical_adjacency_[u]);
    }
    const std::int64_t reach = group_only ? p : node_count();
    const auto seen = std::count_if(dist.begin(), dist.end(), [](int d) { return d >= 0; });
    if (seen != reach) throw std::logic_error("topology is not connected");
    return far;
}

int OhhcTopology::diameter(bool group_only) const {
    const std::int64_t sources = group_only ? processors_per_group() : node_count();
    int best = 0;
    for (std::int64_t s = 0; s < sources; ++s) best = std::max(best, eccentricity(s, group_only));
    return best;
}

std::vector<int> OhhcTopology::distances_from(std::int64_t flat_index) const {
    node(flat_index);
    std::vector<int> dist(static_cast<std::size_t>(node_count()), -1);
    std::deque<std::int64_t> queue{flat_index};
    dist[flat_index] = 0;
    while (!queue.empty()) {
        const std::int64_t u = queue.front();
        queue.pop_front();
        auto visit = [&](std::int64_t v) {
            if (dist[v] >= 0) return;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        };
        for (std::int64_t v : electronic_adjacency_[u]) visit(v);
        if (optical_adjacency_[u] >= 0) visit(optical_adjacency_[u]);
    }
    return dist;
}

bool OhhcTopology::connected() const {
    const auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

void OhhcTopology::write_edge_list(std::ostream& out) const {
    for (const auto& e : electronic_) out << "E " << e.a.flat_index << ' ' << e.b.flat_index << '\n';
    for (const auto& e : optical_) out << "O " << e.a.flat_index << ' ' << e.b.flat_index << '\n';
}

OhhcTopology build_ohhc(const OhhcConfig& config) { return OhhcTopology(config); }

}  // namespace ohhc
