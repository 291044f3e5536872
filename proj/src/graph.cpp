#include "wspan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wspan {

namespace {

uint64_t pair_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
           static_cast<uint64_t>(static_cast<uint32_t>(v));
}

}  // namespace

WeightedGraph::WeightedGraph(NodeId node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)) {
    if (n_ <= 0) throw std::invalid_argument("graph must have at least one node");

    edge_index_.reserve(edges_.size() * 2);
    std::vector<NodeId> deg(static_cast<size_t>(n_), 0);
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("edge weights must be strictly positive and finite");
        auto [it, inserted] = edge_index_.emplace(pair_key(e.u, e.v), static_cast<EdgeId>(i));
        if (!inserted) throw std::invalid_argument("parallel edges are not allowed");
        max_weight_ = std::max(max_weight_, e.weight);
        ++deg[static_cast<size_t>(e.u)];
        ++deg[static_cast<size_t>(e.v)];
    }

    adj_offsets_.assign(static_cast<size_t>(n_) + 1, 0);
    for (NodeId u = 0; u < n_; ++u)
        adj_offsets_[static_cast<size_t>(u) + 1] = adj_offsets_[static_cast<size_t>(u)] + static_cast<size_t>(deg[static_cast<size_t>(u)]);
    adj_.resize(adj_offsets_.back());
    light_offsets_ = adj_offsets_;
    light_order_.resize(adj_offsets_.back());

    std::vector<size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adj_[cursor[static_cast<size_t>(e.u)]++] = {e.v, static_cast<EdgeId>(i), e.weight};
        adj_[cursor[static_cast<size_t>(e.v)]++] = {e.u, static_cast<EdgeId>(i), e.weight};
    }
    for (NodeId u = 0; u < n_; ++u) {
        auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[static_cast<size_t>(u)]);
        auto end = adj_.begin() + static_cast<std::ptrdiff_t>(adj_offsets_[static_cast<size_t>(u) + 1]);
        std::sort(begin, end, [](const AdjEntry& a, const AdjEntry& b) { return a.to < b.to; });
        size_t off = light_offsets_[static_cast<size_t>(u)];
        for (auto it = begin; it != end; ++it) light_order_[off++] = it->edge;
        auto lbegin = light_order_.begin() + static_cast<std::ptrdiff_t>(light_offsets_[static_cast<size_t>(u)]);
        auto lend = light_order_.begin() + static_cast<std::ptrdiff_t>(light_offsets_[static_cast<size_t>(u) + 1]);
        std::sort(lbegin, lend, [this](EdgeId a, EdgeId b) {
            double wa = edges_[static_cast<size_t>(a)].weight;
            double wb = edges_[static_cast<size_t>(b)].weight;
            if (wa != wb) return wa < wb;
            return a < b;
        });
    }

    // connectivity via BFS
    std::vector<uint8_t> seen(static_cast<size_t>(n_), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    NodeId reached = 1;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (const AdjEntry& a : neighbors(u)) {
            if (!seen[static_cast<size_t>(a.to)]) {
                seen[static_cast<size_t>(a.to)] = 1;
                ++reached;
                stack.push_back(a.to);
            }
        }
    }
    connected_ = (reached == n_);
}

NodeId WeightedGraph::degree(NodeId u) const {
    check_node(u);
    return static_cast<NodeId>(adj_offsets_[static_cast<size_t>(u) + 1] - adj_offsets_[static_cast<size_t>(u)]);
}

std::span<const AdjEntry> WeightedGraph::neighbors(NodeId u) const {
    check_node(u);
    return {adj_.data() + adj_offsets_[static_cast<size_t>(u)],
            adj_offsets_[static_cast<size_t>(u) + 1] - adj_offsets_[static_cast<size_t>(u)]};
}

std::span<const EdgeId> WeightedGraph::incident_by_weight(NodeId u) const {
    check_node(u);
    return {light_order_.data() + light_offsets_[static_cast<size_t>(u)],
            light_offsets_[static_cast<size_t>(u) + 1] - light_offsets_[static_cast<size_t>(u)]};
}

std::optional<EdgeId> WeightedGraph::find_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    auto it = edge_index_.find(pair_key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

void WeightedGraph::check_node(NodeId u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("node id out of range");
}

Subgraph::Subgraph(const WeightedGraph& parent)
    : parent_(&parent), mask_(static_cast<size_t>(parent.edge_count()), 0) {}

Subgraph Subgraph::full(const WeightedGraph& parent) {
    Subgraph h(parent);
    std::fill(h.mask_.begin(), h.mask_.end(), 1);
    h.count_ = parent.edge_count();
    return h;
}

Subgraph Subgraph::from_edge_ids(const WeightedGraph& parent, std::span<const EdgeId> ids) {
    Subgraph h(parent);
    for (EdgeId e : ids) {
        if (e < 0 || e >= parent.edge_count())
            throw std::invalid_argument("subgraph edge id out of range");
        if (!h.mask_[static_cast<size_t>(e)]) {
            h.mask_[static_cast<size_t>(e)] = 1;
            ++h.count_;
        }
    }
    return h;
}

Subgraph Subgraph::from_mask(const WeightedGraph& parent, std::vector<uint8_t> mask) {
    if (mask.size() != static_cast<size_t>(parent.edge_count()))
        throw std::invalid_argument("subgraph mask size mismatch");
    Subgraph h(parent);
    h.mask_ = std::move(mask);
    h.count_ = static_cast<EdgeId>(std::count_if(h.mask_.begin(), h.mask_.end(), [](uint8_t b) { return b != 0; }));
    return h;
}

std::vector<EdgeId> Subgraph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(static_cast<size_t>(count_));
    for (size_t e = 0; e < mask_.size(); ++e)
        if (mask_[e]) ids.push_back(static_cast<EdgeId>(e));
    return ids;
}

DemandPairSet DemandPairSet::from_pairs(std::vector<std::pair<NodeId, NodeId>> pairs, NodeId node_count) {
    for (auto& [a, b] : pairs) {
        if (a < 0 || a >= node_count || b < 0 || b >= node_count)
            throw std::invalid_argument("demand pair endpoint out of range");
        if (a == b) throw std::invalid_argument("demand pairs must have distinct endpoints");
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    DemandPairSet out;
    out.pairs_ = std::move(pairs);
    return out;
}

DemandPairSet DemandPairSet::all_pairs(NodeId node_count) {
    DemandPairSet out;
    out.pairs_.reserve(static_cast<size_t>(node_count) * (static_cast<size_t>(node_count) - 1) / 2);
    for (NodeId a = 0; a < node_count; ++a)
        for (NodeId b = a + 1; b < node_count; ++b) out.pairs_.emplace_back(a, b);
    return out;
}

SourceSet SourceSet::from_nodes(std::vector<NodeId> ids, NodeId node_count) {
    for (NodeId v : ids)
        if (v < 0 || v >= node_count) throw std::invalid_argument("source node id out of range");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return SourceSet{std::move(ids)};
}

namespace {

// Strips comments, yields non-empty lines.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        return true;
    }
    return false;
}

double parse_weight(const std::string& tok) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed weight: " + tok);
    return w;
}

}  // namespace

std::string format_weight(double w) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
    return std::string(buf, ptr);
}

WeightedGraph load_graph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw std::invalid_argument("empty graph file");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n <= 0 || m < 0)
        throw std::invalid_argument("malformed graph header, expected 'n m'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw std::invalid_argument("graph file ended before all edges were read");
        std::istringstream row(line);
        long long u = 0, v = 0;
        std::string wtok;
        if (!(row >> u >> v >> wtok))
            throw std::invalid_argument("malformed edge line: " + line);
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), parse_weight(wtok)});
    }
    return WeightedGraph(static_cast<NodeId>(n), std::move(edges));
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return load_graph(in);
}

void save_graph(const WeightedGraph& g, std::ostream& out) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        out << ed.u << ' ' << ed.v << ' ' << format_weight(ed.weight) << '\n';
    }
}

void save_subgraph(const Subgraph& h, std::ostream& out) {
    const WeightedGraph& g = h.parent();
    out << g.node_count() << ' ' << h.edge_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!h.contains(e)) continue;
        const Edge& ed = g.edge(e);
        out << ed.u << ' ' << ed.v << ' ' << format_weight(ed.weight) << '\n';
    }
}

DemandPairSet load_pairs(std::istream& in, NodeId node_count) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::string line;
    while (next_data_line(in, line)) {
        std::istringstream row(line);
        long long a = 0, b = 0;
        if (!(row >> a >> b)) throw std::invalid_argument("malformed pair line: " + line);
        pairs.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
    return DemandPairSet::from_pairs(std::move(pairs), node_count);
}

void save_pairs(const DemandPairSet& pairs, std::ostream& out) {
    for (const auto& [a, b] : pairs.pairs()) out << a << ' ' << b << '\n';
}

SourceSet load_node_set(std::istream& in, NodeId node_count) {
    std::vector<NodeId> ids;
    std::string line;
    while (next_data_line(in, line)) {
        std::istringstream row(line);
        long long v = 0;
        if (!(row >> v)) throw std::invalid_argument("malformed node line: " + line);
        ids.push_back(static_cast<NodeId>(v));
    }
    return SourceSet::from_nodes(std::move(ids), node_count);
}

}  // namespace wspan
