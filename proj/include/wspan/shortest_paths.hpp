#pragma once

#include <vector>

#include "wspan/graph.hpp"

namespace wspan {

/// Canonical single-source shortest paths. Among equal-weight paths the one
/// whose node sequence (read from the source) is lexicographically smallest
/// by node id wins; this makes every path choice deterministic and gives the
/// tree the subpath property: the tree path to any node t passes through the
/// canonical path to every intermediate node.
struct CanonicalTree {
    NodeId source = -1;
    std::vector<double> dist;
    std::vector<NodeId> parent;       // -1 for source and unreachable nodes
    std::vector<EdgeId> parent_edge;  // -1 likewise

    bool reachable(NodeId t) const { return dist[static_cast<size_t>(t)] != kInfDist; }
    /// Node sequence source..t plus total weight. Throws if t is unreachable.
    PathRecord path_to(NodeId t) const;
    /// Edge ids along the tree path source..t, in path order.
    std::vector<EdgeId> path_edges(NodeId t) const;
};

/// Distance-only Dijkstra; unreachable nodes get kInfDist.
std::vector<double> sssp_distances(const WeightedGraph& g, NodeId source);
std::vector<double> sssp_distances(const Subgraph& h, NodeId source);
/// mask may be null (whole graph) or one byte per edge id.
std::vector<double> sssp_distances(const WeightedGraph& g, const uint8_t* mask, NodeId source);

CanonicalTree canonical_shortest_paths(const WeightedGraph& g, NodeId source);
CanonicalTree canonical_shortest_paths(const Subgraph& h, NodeId source);
CanonicalTree canonical_shortest_paths(const WeightedGraph& g, const uint8_t* mask, NodeId source);

/// Canonical shortest path from s to t (s != t). Throws if t is unreachable.
PathRecord shortest_path(const WeightedGraph& g, NodeId s, NodeId t);
PathRecord shortest_path(const Subgraph& h, NodeId s, NodeId t);

/// Canonical shortest-path tree as a subgraph with exactly n-1 edges.
/// Requires a connected graph.
Subgraph shortest_path_tree(const WeightedGraph& g, NodeId root);
Subgraph shortest_path_tree(const Subgraph& h, NodeId root);

/// Ordered missing edges of a path relative to h, oriented along the path.
/// Classification flags are left unset; see classify_missing_edges.
MissingEdgeList missing_edges(const PathRecord& path, const Subgraph& h);

}  // namespace wspan
