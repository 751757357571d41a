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
#include <optional>
#include <string_view>
#include <vector>

namespace ohhc {

enum class GroupMode { Full, Half };

std::string_view to_string(GroupMode mode);
GroupMode parse_group_mode(std::string_view text);

/// Size parameters of an OTIS Hyper Hexa-Cell network.
///
/// A group is a d-dimensional HHC: a (d-1)-hypercube whose every vertex is a
/// six-node cell, so P = 6 * 2^(d-1). Full mode has G = P groups, Half mode
/// G = P / 2.
struct OhhcConfig {
    int dimension = 1;
    GroupMode group_mode = GroupMode::Full;

    /// Throws std::invalid_argument when dimension < 1 or P would overflow.
    void validate() const;

    std::int64_t cube_vertices() const { return std::int64_t{1} << (dimension - 1); }
    std::int64_t processors_per_group() const { return 6 * cube_vertices(); }
    std::int64_t group_count() const {
        return group_mode == GroupMode::Full ? processors_per_group() : processors_per_group() / 2;
    }
    std::int64_t node_count() const { return group_count() * processors_per_group(); }

    friend bool operator==(const OhhcConfig&, const OhhcConfig&) = default;
};

struct NodeAddress {
    std::int64_t group_id = 0;
    std::int64_t hhc_subgroup_id = 0;  // hypercube vertex inside the group
    int hhc_node_id = 0;               // position inside the six-node cell
    std::int64_t flat_index = 0;

    std::int64_t within_group_index() const { return 6 * hhc_subgroup_id + hhc_node_id; }

    friend bool operator==(const NodeAddress&, const NodeAddress&) = default;
};

/// flat index -> address. Throws std::out_of_range outside [0, N).
NodeAddress resolve(std::int64_t flat_index, const OhhcConfig& config);

/// (group, subgroup, node) -> address with flat index filled in.
/// Throws std::out_of_range for any coordinate outside the network.
NodeAddress make_address(std::int64_t group_id, std::int64_t hhc_subgroup_id, int hhc_node_id,
                         const OhhcConfig& config);

/// (group, within-group index) -> address.
NodeAddress address_in_group(std::int64_t group_id, std::int64_t within_group_index,
                             const OhhcConfig& config);

enum class LinkKind { Electronic, Optical };

std::string_view to_string(LinkKind kind);

struct Link {
    NodeAddress a;
    NodeAddress b;
    LinkKind kind = LinkKind::Electronic;
};

/// The pairs of cell positions joined inside one six-node cell: triangles
/// {0,1,2} and {3,4,5} plus the facing pairs 0-5, 1-3, 2-4.
inline constexpr int kCellEdges[9][2] = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                                         {4, 5}, {0, 5}, {1, 3}, {2, 4}};

/// Immutable OHHC graph. Nodes are stored by flat index.
class OhhcTopology {
public:
    explicit OhhcTopology(const OhhcConfig& config);

    const OhhcConfig& config() const { return config_; }
    std::int64_t node_count() const { return config_.node_count(); }
    std::int64_t group_count() const { return config_.group_count(); }
    std::int64_t processors_per_group() const { return config_.processors_per_group(); }

    const std::vector<NodeAddress>& nodes() const { return nodes_; }
    const std::vector<Link>& electronic_edges() const { return electronic_; }
    const std::vector<Link>& optical_edges() const { return optical_; }

    /// Throws std::out_of_range when the address is not part of this network.
    const NodeAddress& node(std::int64_t flat_index) const;
    void check(const NodeAddress& addr) const;

    std::vector<NodeAddress> electronic_neighbors(const NodeAddress& addr) const;
    std::optional<NodeAddress> optical_partner(const NodeAddress& addr) const;

    /// Exact hop diameter by BFS from every node. With group_only the search
    /// is confined to group 0's electronic subgraph (all groups are isomorphic).
    int diameter(bool group_only) const;

    /// BFS hop distances from one node over the whole network.
    std::vector<int> distances_from(std::int64_t flat_index) const;

    bool connected() const;

    /// One line per edge: "E a b" or "O a b" with flat indices.
    void write_edge_list(std::ostream& out) const;

private:
    int eccentricity(std::int64_t source, bool group_only) const;

    OhhcConfig config_;
    std::vector<NodeAddress> nodes_;
    std::vector<Link> electronic_;
    std::vector<Link> optical_;
    std::vector<std::vector<std::int64_t>> electronic_adjacency_;
    std::vector<std::int64_t> optical_adjacency_;  // -1 when the node has no optical link
};

OhhcTopology build_ohhc(const OhhcConfig& config);

}  // namespace ohhc
