#include "wspan/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace wspan {

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

double draw_weight(std::mt19937_64& rng, double w_max, double power) {
    // 1-u is in (0,1], so weights stay strictly positive.
    double u = uniform_unit(rng);
    return w_max * std::pow(1.0 - u, power);
}

uint64_t pair_code(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
           static_cast<uint64_t>(static_cast<uint32_t>(b));
}

}  // namespace

WeightedGraph random_connected_graph(const RandomGraphOptions& options, uint64_t seed) {
    NodeId n = options.n;
    EdgeId m = options.m;
    if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
    size_t max_edges = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
    if (static_cast<size_t>(m) > max_edges)
        throw std::invalid_argument("requested more edges than a simple graph allows");
    if (n > 1 && static_cast<size_t>(m) < static_cast<size_t>(n) - 1)
        throw std::invalid_argument("fewer than n-1 edges cannot be connected");
    if (!(options.w_max > 0.0)) throw std::invalid_argument("w_max must be positive");
    if (!(options.power > 0.0)) throw std::invalid_argument("power must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> pick(0, n - 1);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        std::unordered_set<uint64_t> chosen;
        std::vector<Edge> edges;
        edges.reserve(static_cast<size_t>(m));
        while (edges.size() < static_cast<size_t>(m)) {
            NodeId a = pick(rng);
            NodeId b = pick(rng);
            if (a == b) continue;
            if (!chosen.insert(pair_code(a, b)).second) continue;
            edges.push_back({std::min(a, b), std::max(a, b),
                             draw_weight(rng, options.w_max, options.power)});
        }
        WeightedGraph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("could not sample a connected graph within the attempt cap");
}

WeightedGraph grid_graph(int rows, int cols, double w_max, uint64_t seed) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows >= 1 and cols >= 1");
    if (!(w_max > 0.0)) throw std::invalid_argument("w_max must be positive");
    std::mt19937_64 rng(seed);
    auto id = [cols](int r, int c) { return static_cast<NodeId>(r * cols + c); };
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(rng, w_max, 1.0)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(rng, w_max, 1.0)});
        }
    }
    return WeightedGraph(static_cast<NodeId>(rows) * cols, std::move(edges));
}

DemandPairSet random_pairs(NodeId n, size_t p, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random pairs need n >= 2");
    size_t max_pairs = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
    if (p > max_pairs) throw std::invalid_argument("more pairs requested than exist");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> pick(0, n - 1);
    std::unordered_set<uint64_t> chosen;
    std::vector<std::pair<NodeId, NodeId>> pairs;
    // Dense requests enumerate and shuffle instead of rejection-sampling.
    if (p * 2 > max_pairs) {
        std::vector<std::pair<NodeId, NodeId>> all;
        all.reserve(max_pairs);
        for (NodeId a = 0; a < n; ++a)
            for (NodeId b = a + 1; b < n; ++b) all.emplace_back(a, b);
        std::shuffle(all.begin(), all.end(), rng);
        pairs.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p));
    } else {
        while (pairs.size() < p) {
            NodeId a = pick(rng);
            NodeId b = pick(rng);
            if (a == b) continue;
            if (!chosen.insert(pair_code(a, b)).second) continue;
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    return DemandPairSet::from_pairs(std::move(pairs), n);
}

SourceSet random_sources(NodeId n, size_t count, uint64_t seed) {
    if (count > static_cast<size_t>(n)) throw std::invalid_argument("more sources requested than nodes");
    std::mt19937_64 rng(seed);
    std::vector<NodeId> ids(static_cast<size_t>(n));
    for (NodeId v = 0; v < n; ++v) ids[static_cast<size_t>(v)] = v;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(count);
    return SourceSet::from_nodes(std::move(ids), n);
}

}  // namespace wspan
