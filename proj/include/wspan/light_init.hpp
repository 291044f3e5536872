#pragma once

#include <utility>
#include <vector>

#include "wspan/graph.hpp"

namespace wspan {

struct LightInitParams {
    int d = 1;  // per-node light-edge budget, >= 1
};

/// Endpoints of the owner's d lightest incident edges, tie-broken by
/// (weight, edge id). Size is min(d, deg(owner)).
struct NeighborhoodSet {
    NodeId owner = -1;
    int budget = 0;
    std::vector<NodeId> members;
};

/// Subgraph holding, for every node, its d lightest incident edges (all
/// incident edges for nodes of degree < d).
Subgraph d_light_initialization(const WeightedGraph& g, LightInitParams params);

/// Adversarial counterpart: each node keeps its d heaviest incident edges.
/// Exists to exhibit the failure mode light initialization repairs; never
/// used by the spanner constructions.
Subgraph d_heavy_initialization(const WeightedGraph& g, LightInitParams params);

NeighborhoodSet d_neighborhood(const WeightedGraph& g, NodeId u, LightInitParams params);

/// Sets pre_light/post_light flags. An edge is pre-heavy when strictly
/// heavier than its predecessor in the list, post-heavy when strictly
/// heavier than its successor; the first edge is pre-light and the last is
/// post-light by convention.
MissingEdgeList classify_missing_edges(MissingEdgeList m);

/// (#pre-light, #post-light); the sum is always >= length + 1 for nonempty
/// lists.
std::pair<int, int> count_prelight_postlight(const MissingEdgeList& m);

/// Number of distinct nodes joined by an h-edge to at least one path node.
/// Nodes on the path count when they have an h-edge to another path node.
int adjacent_node_count(const PathRecord& path, const Subgraph& h);

/// Size of the union of d-neighborhoods N*(u) over the oriented-left
/// endpoints u of pre-light missing edges. With reversed=true the path is
/// read target-to-source, so the roles of pre/post-light and left/right
/// endpoints swap.
int x_star_count(const WeightedGraph& g, const MissingEdgeList& classified, int d,
                 bool reversed = false);

/// Path of ell epsilon-weight edges plus d external nodes joined to every
/// path node by a w_heavy edge; requires w_heavy > epsilon * ell so the
/// path stays shortest. Path nodes are 0..ell, externals follow; path edges
/// get the first edge ids.
WeightedGraph figure1_counterexample(int d, int ell, double epsilon, double w_heavy);

}  // namespace wspan
