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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "ohhc/topology.hpp"

using namespace ohhc;

namespace {

// All-pairs shortest paths over an exported edge list; independent of the
// topology's own BFS.
int floyd_warshall_diameter(std::int64_t n, const std::string& edge_list, bool electronic_only,
                            std::int64_t limit) {
    constexpr int inf = 1 << 20;
    std::vector<std::vector<int>> d(limit, std::vector<int>(limit, inf));
    for (std::int64_t i = 0; i < limit; ++i) d[i][i] = 0;
    std::istringstream in(edge_list);
    char kind;
    std::int64_t a, b;
    while (in >> kind >> a >> b) {
        if (electronic_only && kind != 'E') continue;
        if (a >= limit || b >= limit) continue;
        d[a][b] = d[b][a] = 1;
    }
    for (std::int64_t k = 0; k < limit; ++k)
        for (std::int64_t i = 0; i < limit; ++i)
            for (std::int64_t j = 0; j < limit; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;
    for (auto& row : d)
        for (int v : row) best = std::max(best, v);
    (void)n;
    return best;
}

std::string edges_of(const OhhcTopology& t) {
    std::ostringstream out;
    t.write_edge_list(out);
    return out.str();
}

}  // namespace

TEST_CASE("node and group counts") {
    struct Row {
        int d;
        std::int64_t groups_full, nodes_full, groups_half, nodes_half;
    };
    for (const Row& r : {Row{1, 6, 36, 3, 18}, Row{2, 12, 144, 6, 72}, Row{3, 24, 576, 12, 288},
                         Row{4, 48, 2304, 24, 1152}}) {
        CAPTURE(r.d);
        const auto full = build_ohhc({r.d, GroupMode::Full});
        const auto half = build_ohhc({r.d, GroupMode::Half});
        CHECK(full.group_count() == r.groups_full);
        CHECK(full.node_count() == r.nodes_full);
        CHECK(full.nodes().size() == static_cast<std::size_t>(r.nodes_full));
        CHECK(half.group_count() == r.groups_half);
        CHECK(half.node_count() == r.nodes_half);
    }
}

TEST_CASE("rejects dimension below one") {
    CHECK_THROWS_AS(build_ohhc({0, GroupMode::Full}), std::invalid_argument);
    CHECK_THROWS_AS(build_ohhc({-3, GroupMode::Half}), std::invalid_argument);
}

TEST_CASE("electronic edge count: 9 per cell plus 6 per hypercube edge") {
    for (int d = 1; d <= 4; ++d) {
        const auto t = build_ohhc({d, GroupMode::Half});
        const std::int64_t vertices = std::int64_t{1} << (d - 1);
        const std::int64_t cube_edges = vertices * (d - 1) / 2;
        CHECK(static_cast<std::int64_t>(t.electronic_edges().size()) ==
              t.group_count() * (9 * vertices + 6 * cube_edges));
        for (const auto& e : t.electronic_edges()) CHECK(e.a.group_id == e.b.group_id);
        for (const auto& e : t.optical_edges()) CHECK(e.a.group_id != e.b.group_id);
    }
}

TEST_CASE("electronic neighbours") {
    const OhhcConfig c1{1, GroupMode::Full};
    const auto t1 = build_ohhc(c1);
    for (std::int64_t g = 0; g < t1.group_count(); ++g) {
        const auto nbrs = t1.electronic_neighbors(make_address(g, 0, 0, c1));
        REQUIRE(nbrs.size() == 3);
        CHECK(nbrs[0] == make_address(g, 0, 1, c1));
        CHECK(nbrs[1] == make_address(g, 0, 2, c1));
        CHECK(nbrs[2] == make_address(g, 0, 5, c1));
    }
    for (int d = 1; d <= 4; ++d) {
        for (auto mode : {GroupMode::Full, GroupMode::Half}) {
            const auto t = build_ohhc({d, mode});
            for (const auto& v : t.nodes()) CHECK(t.electronic_neighbors(v).size() == static_cast<std::size_t>(d + 2));
        }
    }
    NodeAddress bogus = make_address(0, 0, 0, c1);
    bogus.flat_index = 36;
    CHECK_THROWS_AS(t1.electronic_neighbors(bogus), std::out_of_range);
}

TEST_CASE("optical partner follows the transpose rule") {
    const OhhcConfig full{1, GroupMode::Full};
    const auto t = build_ohhc(full);
    const auto partner = t.optical_partner(address_in_group(3, 2, full));
    REQUIRE(partner);
    CHECK(*partner == address_in_group(2, 3, full));
    for (std::int64_t k = 0; k < 6; ++k) CHECK_FALSE(t.optical_partner(address_in_group(k, k, full)));

    const OhhcConfig half{1, GroupMode::Half};
    const auto th = build_ohhc(half);
    CHECK_FALSE(th.optical_partner(address_in_group(1, 5, half)));
    CHECK(*th.optical_partner(address_in_group(1, 2, half)) == address_in_group(2, 1, half));

    for (int d = 1; d <= 4; ++d) {
        for (auto mode : {GroupMode::Full, GroupMode::Half}) {
            const auto topo = build_ohhc({d, mode});
            std::size_t linked = 0;
            for (const auto& v : topo.nodes()) {
                const auto p = topo.optical_partner(v);
                if (!p) continue;
                ++linked;
                CHECK(p->group_id == v.within_group_index());
                CHECK(p->within_group_index() == v.group_id);
                CHECK(*topo.optical_partner(*p) == v);
            }
            const auto g = topo.group_count();
            CHECK(linked == static_cast<std::size_t>(g * (g - 1)));
        }
    }
}

TEST_CASE("resolve round-trips over every flat index") {
    CHECK(resolve(0, {1, GroupMode::Full}) == NodeAddress{0, 0, 0, 0});
    CHECK(resolve(7, {1, GroupMode::Full}) == NodeAddress{1, 0, 1, 7});
    CHECK(resolve(143, {2, GroupMode::Full}) == NodeAddress{11, 1, 5, 143});
    for (int d = 1; d <= 4; ++d) {
        for (auto mode : {GroupMode::Full, GroupMode::Half}) {
            const OhhcConfig c{d, mode};
            for (std::int64_t i = 0; i < c.node_count(); ++i) {
                const auto a = resolve(i, c);
                REQUIRE(make_address(a.group_id, a.hhc_subgroup_id, a.hhc_node_id, c) == a);
                REQUIRE(a.flat_index == a.group_id * c.processors_per_group() + a.within_group_index());
            }
            CHECK_THROWS_AS(resolve(c.node_count(), c), std::out_of_range);
            CHECK_THROWS_AS(resolve(-1, c), std::out_of_range);
        }
    }
}

TEST_CASE("group diameter is d + 1") {
    for (int d = 1; d <= 4; ++d) {
        CAPTURE(d);
        CHECK(build_ohhc({d, GroupMode::Full}).diameter(true) == d + 1);
        CHECK(build_ohhc({d, GroupMode::Half}).diameter(true) == d + 1);
    }
}

TEST_CASE("BFS diameters agree with an all-pairs oracle") {
    for (int d = 1; d <= 3; ++d) {
        const auto t = build_ohhc({d, GroupMode::Full});
        CHECK(t.diameter(true) == floyd_warshall_diameter(t.node_count(), edges_of(t), true, t.processors_per_group()));
    }
    for (auto mode : {GroupMode::Full, GroupMode::Half}) {
        for (int d = 1; d <= 2; ++d) {
            const auto t = build_ohhc({d, mode});
            CHECK(t.diameter(false) == floyd_warshall_diameter(t.node_count(), edges_of(t), false, t.node_count()));
        }
    }
}

TEST_CASE("network diameter stays within 2d + 3") {
    for (int d = 1; d <= 4; ++d) {
        for (auto mode : {GroupMode::Full, GroupMode::Half}) {
            const auto t = build_ohhc({d, mode});
            CHECK(t.connected());
            CHECK(t.diameter(false) <= 2 * d + 3);
        }
    }
    CHECK(build_ohhc({1, GroupMode::Full}).diameter(false) <= 5);
}

TEST_CASE("edge list format") {
    const auto t = build_ohhc({1, GroupMode::Half});
    const auto text = edges_of(t);
    std::istringstream in(text);
    std::string line;
    std::size_t e = 0, o = 0;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        char kind;
        std::int64_t a, b;
        REQUIRE(static_cast<bool>(fields >> kind >> a >> b));
        CHECK((kind == 'E' || kind == 'O'));
        (kind == 'E' ? e : o)++;
        CHECK(seen.insert({std::min(a, b), std::max(a, b)}).second);
    }
    CHECK(e == t.electronic_edges().size());
    CHECK(o == t.optical_edges().size());
    CHECK(o == 3);  // groups 0-1, 0-2, 1-2
}
