#include "wspan/shortest_paths.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wspan {

namespace {

using HeapItem = std::pair<double, NodeId>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>>;

// Walks parent pointers root..u into out (forward order).
void root_path(const std::vector<NodeId>& parent, NodeId u, std::vector<NodeId>& out) {
    out.clear();
    for (NodeId x = u; x != -1; x = parent[static_cast<size_t>(x)]) out.push_back(x);
    std::reverse(out.begin(), out.end());
}

}  // namespace

std::vector<double> sssp_distances(const WeightedGraph& g, const uint8_t* mask, NodeId source) {
    g.check_node(source);
    std::vector<double> dist(static_cast<size_t>(g.node_count()), kInfDist);
    std::vector<uint8_t> settled(static_cast<size_t>(g.node_count()), 0);
    MinHeap heap;
    dist[static_cast<size_t>(source)] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (settled[static_cast<size_t>(u)]) continue;
        settled[static_cast<size_t>(u)] = 1;
        for (const AdjEntry& a : g.neighbors(u)) {
            if (mask && !mask[static_cast<size_t>(a.edge)]) continue;
            double nd = d + a.weight;
            if (nd < dist[static_cast<size_t>(a.to)]) {
                dist[static_cast<size_t>(a.to)] = nd;
                heap.push({nd, a.to});
            }
        }
    }
    return dist;
}

std::vector<double> sssp_distances(const WeightedGraph& g, NodeId source) {
    return sssp_distances(g, nullptr, source);
}

std::vector<double> sssp_distances(const Subgraph& h, NodeId source) {
    return sssp_distances(h.parent(), h.mask().data(), source);
}

CanonicalTree canonical_shortest_paths(const WeightedGraph& g, const uint8_t* mask, NodeId source) {
    g.check_node(source);
    size_t n = static_cast<size_t>(g.node_count());
    CanonicalTree tree;
    tree.source = source;
    tree.dist.assign(n, kInfDist);
    tree.parent.assign(n, -1);
    tree.parent_edge.assign(n, -1);
    std::vector<uint8_t> settled(n, 0);
    std::vector<NodeId> buf_a, buf_b;
    MinHeap heap;
    tree.dist[static_cast<size_t>(source)] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (settled[static_cast<size_t>(u)]) continue;
        settled[static_cast<size_t>(u)] = 1;
        for (const AdjEntry& a : g.neighbors(u)) {
            if (mask && !mask[static_cast<size_t>(a.edge)]) continue;
            size_t v = static_cast<size_t>(a.to);
            if (settled[v]) continue;
            double nd = d + a.weight;
            if (nd < tree.dist[v]) {
                tree.dist[v] = nd;
                tree.parent[v] = u;
                tree.parent_edge[v] = a.edge;
                heap.push({nd, a.to});
            } else if (nd == tree.dist[v] && tree.parent[v] != u) {
                // Equal-weight candidate: keep the lexicographically smaller
                // root path. Both u and the current parent are settled.
                root_path(tree.parent, u, buf_a);
                root_path(tree.parent, tree.parent[v], buf_b);
                bool take = false;
                size_t common = std::min(buf_a.size(), buf_b.size());
                size_t i = 0;
                for (; i < common; ++i) {
                    if (buf_a[i] != buf_b[i]) {
                        take = buf_a[i] < buf_b[i];
                        break;
                    }
                }
                if (i == common && buf_a.size() != buf_b.size()) {
                    // One settled path is a prefix of the other. The appended
                    // node is a.to on the shorter side versus the longer
                    // path's next node.
                    if (buf_a.size() < buf_b.size())
                        take = a.to < buf_b[common];
                    else
                        take = buf_a[common] < a.to;
                }
                if (take) {
                    tree.parent[v] = u;
                    tree.parent_edge[v] = a.edge;
                }
            }
        }
    }
    return tree;
}

CanonicalTree canonical_shortest_paths(const WeightedGraph& g, NodeId source) {
    return canonical_shortest_paths(g, nullptr, source);
}

CanonicalTree canonical_shortest_paths(const Subgraph& h, NodeId source) {
    return canonical_shortest_paths(h.parent(), h.mask().data(), source);
}

PathRecord CanonicalTree::path_to(NodeId t) const {
    if (!reachable(t)) throw std::runtime_error("no path to requested node");
    PathRecord rec;
    for (NodeId x = t; x != -1; x = parent[static_cast<size_t>(x)]) rec.nodes.push_back(x);
    std::reverse(rec.nodes.begin(), rec.nodes.end());
    rec.total_weight = dist[static_cast<size_t>(t)];
    return rec;
}

std::vector<EdgeId> CanonicalTree::path_edges(NodeId t) const {
    if (!reachable(t)) throw std::runtime_error("no path to requested node");
    std::vector<EdgeId> out;
    for (NodeId x = t; parent[static_cast<size_t>(x)] != -1; x = parent[static_cast<size_t>(x)])
        out.push_back(parent_edge[static_cast<size_t>(x)]);
    std::reverse(out.begin(), out.end());
    return out;
}

PathRecord shortest_path(const WeightedGraph& g, NodeId s, NodeId t) {
    g.check_node(s);
    g.check_node(t);
    if (s == t) throw std::invalid_argument("shortest_path requires distinct endpoints");
    CanonicalTree tree = canonical_shortest_paths(g, s);
    if (!tree.reachable(t)) throw std::runtime_error("no path between requested nodes");
    return tree.path_to(t);
}

PathRecord shortest_path(const Subgraph& h, NodeId s, NodeId t) {
    h.parent().check_node(s);
    h.parent().check_node(t);
    if (s == t) throw std::invalid_argument("shortest_path requires distinct endpoints");
    CanonicalTree tree = canonical_shortest_paths(h, s);
    if (!tree.reachable(t)) throw std::runtime_error("no path between requested nodes");
    return tree.path_to(t);
}

namespace {

Subgraph tree_from(const WeightedGraph& g, const CanonicalTree& tree) {
    std::vector<EdgeId> ids;
    ids.reserve(static_cast<size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v == tree.source) continue;
        if (!tree.reachable(v)) throw std::invalid_argument("shortest_path_tree requires a connected graph");
        ids.push_back(tree.parent_edge[static_cast<size_t>(v)]);
    }
    return Subgraph::from_edge_ids(g, ids);
}

}  // namespace

Subgraph shortest_path_tree(const WeightedGraph& g, NodeId root) {
    return tree_from(g, canonical_shortest_paths(g, root));
}

Subgraph shortest_path_tree(const Subgraph& h, NodeId root) {
    return tree_from(h.parent(), canonical_shortest_paths(h, root));
}

MissingEdgeList missing_edges(const PathRecord& path, const Subgraph& h) {
    const WeightedGraph& g = h.parent();
    MissingEdgeList out;
    for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        NodeId u = path.nodes[i];
        NodeId v = path.nodes[i + 1];
        auto e = g.find_edge(u, v);
        if (!e) throw std::invalid_argument("path uses an edge absent from the parent graph");
        if (h.contains(*e)) continue;
        out.edges.push_back({*e, u, v, g.edge(*e).weight, false, false});
    }
    return out;
}

}  // namespace wspan
