#include "wspan/light_init.hpp"

#include <algorithm>
#include <stdexcept>

namespace wspan {

namespace {

void check_params(const LightInitParams& params) {
    if (params.d < 1) throw std::invalid_argument("light-init budget d must be >= 1");
}

}  // namespace

Subgraph d_light_initialization(const WeightedGraph& g, LightInitParams params) {
    check_params(params);
    std::vector<uint8_t> mask(static_cast<size_t>(g.edge_count()), 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto order = g.incident_by_weight(u);
        size_t take = std::min<size_t>(static_cast<size_t>(params.d), order.size());
        for (size_t i = 0; i < take; ++i) mask[static_cast<size_t>(order[i])] = 1;
    }
    return Subgraph::from_mask(g, std::move(mask));
}

Subgraph d_heavy_initialization(const WeightedGraph& g, LightInitParams params) {
    check_params(params);
    std::vector<uint8_t> mask(static_cast<size_t>(g.edge_count()), 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto order = g.incident_by_weight(u);
        size_t take = std::min<size_t>(static_cast<size_t>(params.d), order.size());
        for (size_t i = 0; i < take; ++i)
            mask[static_cast<size_t>(order[order.size() - 1 - i])] = 1;
    }
    return Subgraph::from_mask(g, std::move(mask));
}

NeighborhoodSet d_neighborhood(const WeightedGraph& g, NodeId u, LightInitParams params) {
    check_params(params);
    g.check_node(u);
    NeighborhoodSet out;
    out.owner = u;
    out.budget = params.d;
    auto order = g.incident_by_weight(u);
    size_t take = std::min<size_t>(static_cast<size_t>(params.d), order.size());
    out.members.reserve(take);
    for (size_t i = 0; i < take; ++i) {
        const Edge& e = g.edge(order[i]);
        out.members.push_back(e.u == u ? e.v : e.u);
    }
    return out;
}

MissingEdgeList classify_missing_edges(MissingEdgeList m) {
    size_t ell = m.edges.size();
    for (size_t i = 0; i < ell; ++i) {
        MissingEdge& e = m.edges[i];
        e.pre_light = (i == 0) || !(e.weight > m.edges[i - 1].weight);
        e.post_light = (i + 1 == ell) || !(e.weight > m.edges[i + 1].weight);
    }
    m.classified = true;
    return m;
}

std::pair<int, int> count_prelight_postlight(const MissingEdgeList& m) {
    MissingEdgeList c = m.classified ? m : classify_missing_edges(m);
    int pre = 0, post = 0;
    for (const MissingEdge& e : c.edges) {
        if (e.pre_light) ++pre;
        if (e.post_light) ++post;
    }
    return {pre, post};
}

int adjacent_node_count(const PathRecord& path, const Subgraph& h) {
    const WeightedGraph& g = h.parent();
    std::vector<uint8_t> counted(static_cast<size_t>(g.node_count()), 0);
    int count = 0;
    for (NodeId u : path.nodes) {
        for (const AdjEntry& a : g.neighbors(u)) {
            if (!h.contains(a.edge)) continue;
            if (!counted[static_cast<size_t>(a.to)]) {
                counted[static_cast<size_t>(a.to)] = 1;
                ++count;
            }
        }
    }
    return count;
}

int x_star_count(const WeightedGraph& g, const MissingEdgeList& classified, int d, bool reversed) {
    if (!classified.classified)
        throw std::invalid_argument("x_star_count requires a classified missing-edge list");
    std::vector<uint8_t> seen(static_cast<size_t>(g.node_count()), 0);
    int count = 0;
    size_t ell = classified.edges.size();
    for (size_t i = 0; i < ell; ++i) {
        // Reading the path backwards, missing edge j plays the role of edge
        // ell-1-j with endpoints swapped, so post-light edges and their v
        // endpoints take over.
        const MissingEdge& e = classified.edges[reversed ? ell - 1 - i : i];
        bool light = reversed ? e.post_light : e.pre_light;
        if (!light) continue;
        NodeId left = reversed ? e.v : e.u;
        for (NodeId member : d_neighborhood(g, left, {d}).members) {
            if (!seen[static_cast<size_t>(member)]) {
                seen[static_cast<size_t>(member)] = 1;
                ++count;
            }
        }
    }
    return count;
}

WeightedGraph figure1_counterexample(int d, int ell, double epsilon, double w_heavy) {
    if (d < 1 || ell < 1) throw std::invalid_argument("figure1 requires d >= 1 and ell >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("figure1 requires epsilon > 0");
    if (!(w_heavy > epsilon * static_cast<double>(ell)))
        throw std::invalid_argument("figure1 requires w_heavy > epsilon * ell");
    NodeId n = static_cast<NodeId>(ell + 1 + d);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(ell) + static_cast<size_t>(d) * static_cast<size_t>(ell + 1));
    for (int i = 0; i < ell; ++i)
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), epsilon});
    for (int x = 0; x < d; ++x) {
        NodeId ext = static_cast<NodeId>(ell + 1 + x);
        for (int i = 0; i <= ell; ++i) edges.push_back({ext, static_cast<NodeId>(i), w_heavy});
    }
    return WeightedGraph(n, std::move(edges));
}

}  // namespace wspan
