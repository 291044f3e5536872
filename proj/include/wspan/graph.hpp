#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wspan {

using NodeId = int32_t;
using EdgeId = int32_t;

inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct Edge {
    NodeId u = -1;
    NodeId v = -1;
    double weight = 0.0;
};

struct AdjEntry {
    NodeId to;
    EdgeId edge;
    double weight;
};

/// Undirected graph with strictly positive edge weights. Immutable after
/// construction; safe for concurrent reads. Self-loops and parallel edges
/// are rejected. Edge ids are dense and follow input order.
class WeightedGraph {
public:
    WeightedGraph(NodeId node_count, std::vector<Edge> edges);

    NodeId node_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    /// Maximum edge weight (0 for an edgeless graph).
    double max_weight() const { return max_weight_; }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    NodeId degree(NodeId u) const;
    /// Neighbors of u, sorted by neighbor id.
    std::span<const AdjEntry> neighbors(NodeId u) const;
    /// Incident edge ids of u, sorted by (weight, edge id). The prefix of
    /// length d is u's set of d lightest incident edges.
    std::span<const EdgeId> incident_by_weight(NodeId u) const;

    std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
    bool is_connected() const { return connected_; }

    void check_node(NodeId u) const;

private:
    NodeId n_;
    std::vector<Edge> edges_;
    double max_weight_ = 0.0;
    bool connected_ = false;

    std::vector<size_t> adj_offsets_;
    std::vector<AdjEntry> adj_;
    std::vector<size_t> light_offsets_;
    std::vector<EdgeId> light_order_;
    std::unordered_map<uint64_t, EdgeId> edge_index_;
};

/// Edge subset of a parent graph. The parent must outlive the subgraph.
class Subgraph {
public:
    explicit Subgraph(const WeightedGraph& parent);
    static Subgraph full(const WeightedGraph& parent);
    static Subgraph from_edge_ids(const WeightedGraph& parent, std::span<const EdgeId> ids);
    static Subgraph from_mask(const WeightedGraph& parent, std::vector<uint8_t> mask);

    const WeightedGraph& parent() const { return *parent_; }
    bool contains(EdgeId e) const { return mask_[static_cast<size_t>(e)] != 0; }
    EdgeId edge_count() const { return count_; }
    const std::vector<uint8_t>& mask() const { return mask_; }
    /// Member edge ids in ascending order.
    std::vector<EdgeId> edge_ids() const;

    bool operator==(const Subgraph& other) const { return mask_ == other.mask_; }

private:
    const WeightedGraph* parent_;
    std::vector<uint8_t> mask_;
    EdgeId count_ = 0;
};

/// An s-to-t walk along graph edges; first node is s, last is t.
struct PathRecord {
    std::vector<NodeId> nodes;
    double total_weight = 0.0;

    NodeId source() const { return nodes.front(); }
    NodeId target() const { return nodes.back(); }
    size_t edge_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// One missing edge of a path relative to a subgraph, oriented along the
/// path (u closer to the path source).
struct MissingEdge {
    EdgeId id = -1;
    NodeId u = -1;
    NodeId v = -1;
    double weight = 0.0;
    bool pre_light = false;
    bool post_light = false;
};

struct MissingEdgeList {
    std::vector<MissingEdge> edges;
    bool classified = false;

    size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }
};

/// Distinct unordered node pairs, stored normalized (smaller id first) in
/// lexicographic order.
class DemandPairSet {
public:
    DemandPairSet() = default;
    static DemandPairSet from_pairs(std::vector<std::pair<NodeId, NodeId>> pairs, NodeId node_count);
    static DemandPairSet all_pairs(NodeId node_count);

    std::span<const std::pair<NodeId, NodeId>> pairs() const { return pairs_; }
    size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

private:
    std::vector<std::pair<NodeId, NodeId>> pairs_;
};

/// Distinct node ids, sorted ascending.
struct SourceSet {
    std::vector<NodeId> nodes;

    static SourceSet from_nodes(std::vector<NodeId> ids, NodeId node_count);
    size_t size() const { return nodes.size(); }
};

// Edge-list text format: "n m" header, then "u v w" per edge, '#' comments.
// Weights are printed with shortest round-trip precision, so a loaded file
// saves back byte-identically.
WeightedGraph load_graph(std::istream& in);
WeightedGraph load_graph_file(const std::string& path);
void save_graph(const WeightedGraph& g, std::ostream& out);
void save_subgraph(const Subgraph& h, std::ostream& out);
std::string format_weight(double w);

// Pair files: one "u v" per line, '#' comments.
DemandPairSet load_pairs(std::istream& in, NodeId node_count);
void save_pairs(const DemandPairSet& pairs, std::ostream& out);

// Node-set files: one id per line, '#' comments.
SourceSet load_node_set(std::istream& in, NodeId node_count);

}  // namespace wspan
