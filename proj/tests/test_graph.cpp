#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "wspan/generate.hpp"
#include "wspan/graph.hpp"
#include "wspan/shortest_paths.hpp"

using namespace wspan;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(WeightedGraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 0, 1.0}}), std::invalid_argument);          // self-loop
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);  // parallel
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, 0.0}}), std::invalid_argument);          // zero weight
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, -0.5}}), std::invalid_argument);         // negative
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 2, 1.0}}), std::invalid_argument);          // range
}

TEST_CASE("max weight and degrees") {
    WeightedGraph g(4, {{0, 1, 0.5}, {1, 2, 2.5}, {2, 3, 1.0}, {0, 2, 0.25}});
    CHECK(g.max_weight() == 2.5);
    CHECK(g.degree(2) == 3);
    CHECK(g.degree(3) == 1);
    CHECK(g.is_connected());
    CHECK(g.find_edge(2, 0).has_value());
    CHECK(g.find_edge(0, 3) == std::nullopt);
}

TEST_CASE("disconnected graphs load but report it") {
    WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_FALSE(g.is_connected());
    auto dist = sssp_distances(g, 0);
    CHECK(dist[2] == kInfDist);
}

TEST_CASE("edge-list round trip is byte identical") {
    std::string text = "4 3\n0 1 0.5\n1 2 0.30000000000000004\n2 3 12345.678\n";
    std::istringstream in(text);
    WeightedGraph g = load_graph(in);
    std::ostringstream out;
    save_graph(g, out);
    CHECK(out.str() == text);

    // comments and blank lines are tolerated on input
    std::istringstream commented("# header\n\n2 1\n# edge\n0 1 0.125\n");
    WeightedGraph g2 = load_graph(commented);
    CHECK(g2.edge_count() == 1);
    CHECK(g2.edge(0).weight == 0.125);
}

TEST_CASE("format_weight round trips doubles exactly") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        double w = uniform_unit(rng) * 1000.0 + 1e-12;
        std::istringstream in("2 1\n0 1 " + format_weight(w) + "\n");
        CHECK(load_graph(in).edge(0).weight == w);
    }
}

TEST_CASE("load errors") {
    std::istringstream empty("");
    CHECK_THROWS_AS(load_graph(empty), std::invalid_argument);
    std::istringstream bad_header("x y\n");
    CHECK_THROWS_AS(load_graph(bad_header), std::invalid_argument);
    std::istringstream truncated("3 2\n0 1 1.0\n");
    CHECK_THROWS_AS(load_graph(truncated), std::invalid_argument);
    std::istringstream bad_weight("2 1\n0 1 abc\n");
    CHECK_THROWS_AS(load_graph(bad_weight), std::invalid_argument);
}

TEST_CASE("subgraph membership and edge ids") {
    WeightedGraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
    Subgraph h = Subgraph::from_edge_ids(g, std::vector<EdgeId>{2, 0});
    CHECK(h.edge_count() == 2);
    CHECK(h.contains(0));
    CHECK_FALSE(h.contains(1));
    CHECK(h.edge_ids() == std::vector<EdgeId>{0, 2});
    CHECK(Subgraph::full(g).edge_count() == 4);
    CHECK_THROWS_AS(Subgraph::from_edge_ids(g, std::vector<EdgeId>{9}), std::invalid_argument);
}

TEST_CASE("subgraph distances dominate parent distances") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedGraph g = random_connected_graph({20, 50, 1.0, 1.0, 1000}, 1000 + trial);
        std::vector<uint8_t> mask(50, 0);
        for (size_t e = 0; e < mask.size(); ++e) mask[e] = uniform_unit(rng) < 0.6 ? 1 : 0;
        Subgraph h = Subgraph::from_mask(g, mask);
        for (NodeId s = 0; s < g.node_count(); s += 7) {
            auto dg = sssp_distances(g, s);
            auto dh = sssp_distances(h, s);
            for (NodeId v = 0; v < g.node_count(); ++v) CHECK(dh[v] >= dg[v]);
        }
    }
}

TEST_CASE("demand pairs normalize, dedup and validate") {
    auto pairs = DemandPairSet::from_pairs({{3, 1}, {1, 3}, {0, 2}}, 5);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs.pairs()[0] == std::pair<NodeId, NodeId>{0, 2});
    CHECK(pairs.pairs()[1] == std::pair<NodeId, NodeId>{1, 3});
    CHECK_THROWS_AS(DemandPairSet::from_pairs({{1, 1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(DemandPairSet::from_pairs({{0, 7}}, 3), std::invalid_argument);
    CHECK(DemandPairSet::all_pairs(5).size() == 10);
}

TEST_CASE("pair and node-set files") {
    std::istringstream in("# demand\n0 3\n2 1\n");
    DemandPairSet pairs = load_pairs(in, 4);
    CHECK(pairs.size() == 2);
    std::ostringstream out;
    save_pairs(pairs, out);
    CHECK(out.str() == "0 3\n1 2\n");

    std::istringstream nodes("2\n0\n2\n");
    SourceSet s = load_node_set(nodes, 4);
    CHECK(s.nodes == std::vector<NodeId>{0, 2});
}
