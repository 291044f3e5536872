#include "wspan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "wspan/light_init.hpp"
#include "wspan/shortest_paths.hpp"

namespace wspan {

StretchReport verify_stretch(const WeightedGraph& g, const Subgraph& h, const DemandPairSet& pairs,
                             double bound, Exec exec) {
    if (&h.parent() != &g) throw std::invalid_argument("subgraph does not belong to this graph");
    StretchReport report;
    report.bound = bound;
    report.pairs.resize(pairs.size());

    // Group pair indices by the smaller endpoint so each source needs one
    // pair of shortest-path runs.
    std::vector<NodeId> sources;
    std::unordered_map<NodeId, std::vector<size_t>> by_source;
    auto all = pairs.pairs();
    for (size_t i = 0; i < all.size(); ++i) {
        auto [a, b] = all[i];
        g.check_node(a);
        g.check_node(b);
        auto [it, inserted] = by_source.try_emplace(a);
        if (inserted) sources.push_back(a);
        it->second.push_back(i);
    }

    auto run_source = [&](NodeId s) {
        std::vector<double> dg = sssp_distances(g, s);
        std::vector<double> dh = sssp_distances(h, s);
        for (size_t i : by_source[s]) {
            auto [a, b] = all[i];
            PairStretch& ps = report.pairs[i];
            ps.s = a;
            ps.t = b;
            ps.dist_g = dg[static_cast<size_t>(b)];
            ps.dist_h = dh[static_cast<size_t>(b)];
            ps.error = ps.dist_h - ps.dist_g;
            ps.satisfied = ps.dist_h <= ps.dist_g + bound;
        }
    };

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (size_t si = 0; si < sources.size(); ++si) run_source(sources[si]);
    } else {
        for (NodeId s : sources) run_source(s);
    }

    report.pass = true;
    for (const PairStretch& ps : report.pairs) {
        report.max_error = std::max(report.max_error, ps.error);
        report.pass = report.pass && ps.satisfied;
    }
    return report;
}

bool near_connected(const WeightedGraph& g, const Subgraph& h, NodeId s, NodeId v) {
    g.check_node(s);
    g.check_node(v);
    std::vector<double> dg = sssp_distances(g, s);
    std::vector<double> dh = sssp_distances(h, s);
    for (const AdjEntry& a : g.neighbors(v)) {
        if (!h.contains(a.edge)) continue;
        if (dh[static_cast<size_t>(a.to)] == dg[static_cast<size_t>(a.to)]) return true;
    }
    return false;
}

namespace {

std::vector<std::vector<double>> bellman_ford_table(const WeightedGraph& g, const uint8_t* mask,
                                                    NodeId node_cap) {
    NodeId n = g.node_count();
    if (n > node_cap) throw std::invalid_argument("brute_force_distances: graph exceeds node cap");
    std::vector<std::vector<double>> table(static_cast<size_t>(n));
    for (NodeId s = 0; s < n; ++s) {
        std::vector<double>& dist = table[static_cast<size_t>(s)];
        dist.assign(static_cast<size_t>(n), kInfDist);
        dist[static_cast<size_t>(s)] = 0.0;
        for (NodeId round = 0; round + 1 < n; ++round) {
            bool changed = false;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (mask && !mask[static_cast<size_t>(e)]) continue;
                const Edge& ed = g.edge(e);
                size_t u = static_cast<size_t>(ed.u), v = static_cast<size_t>(ed.v);
                if (dist[u] + ed.weight < dist[v]) {
                    dist[v] = dist[u] + ed.weight;
                    changed = true;
                }
                if (dist[v] + ed.weight < dist[u]) {
                    dist[u] = dist[v] + ed.weight;
                    changed = true;
                }
            }
            if (!changed) break;
        }
    }
    return table;
}

}  // namespace

std::vector<std::vector<double>> brute_force_distances(const WeightedGraph& g, NodeId node_cap) {
    return bellman_ford_table(g, nullptr, node_cap);
}

std::vector<std::vector<double>> brute_force_distances(const Subgraph& h, NodeId node_cap) {
    return bellman_ford_table(h.parent(), h.mask().data(), node_cap);
}

namespace {

std::vector<std::vector<double>> dijkstra_table(const WeightedGraph& g, const uint8_t* mask,
                                                Exec exec) {
    NodeId n = g.node_count();
    std::vector<std::vector<double>> table(static_cast<size_t>(n));
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (NodeId s = 0; s < n; ++s) table[static_cast<size_t>(s)] = sssp_distances(g, mask, s);
    } else {
        for (NodeId s = 0; s < n; ++s) table[static_cast<size_t>(s)] = sssp_distances(g, mask, s);
    }
    return table;
}

}  // namespace

std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g, Exec exec) {
    return dijkstra_table(g, nullptr, exec);
}

std::vector<std::vector<double>> all_pairs_distances(const Subgraph& h, Exec exec) {
    return dijkstra_table(h.parent(), h.mask().data(), exec);
}

int max_path_adjacency(const WeightedGraph& g, const PathRecord& path) {
    std::vector<uint8_t> on_path(static_cast<size_t>(g.node_count()), 0);
    for (NodeId u : path.nodes) on_path[static_cast<size_t>(u)] = 1;
    int best = 0;
    for (NodeId x = 0; x < g.node_count(); ++x) {
        int count = 0;
        for (const AdjEntry& a : g.neighbors(x))
            if (on_path[static_cast<size_t>(a.to)]) ++count;
        best = std::max(best, count);
    }
    return best;
}

LemmaCheckResult run_lemma_checks(const WeightedGraph& g, int d, NodeId s, NodeId t) {
    LemmaCheckResult res;
    Subgraph init = d_light_initialization(g, {d});
    PathRecord path = shortest_path(g, s, t);
    MissingEdgeList m = classify_missing_edges(missing_edges(path, init));
    res.ell = static_cast<int>(m.size());
    if (m.empty()) return res;

    auto [pre, post] = count_prelight_postlight(m);
    res.prelight = pre;
    res.postlight = post;
    res.count_bound_ok = (pre + post >= res.ell + 1);

    // Weight chain: whenever two missing edges share a d-neighborhood member
    // at their left endpoints, the later weight dominates the strictly-between
    // weights. Checked over all index pairs sharing a member.
    std::vector<double> prefix(m.size() + 1, 0.0);
    for (size_t i = 0; i < m.size(); ++i) prefix[i + 1] = prefix[i] + m.edges[i].weight;
    std::unordered_map<NodeId, std::vector<size_t>> member_to_indices;
    std::unordered_map<NodeId, int> prelight_overlap;
    for (size_t i = 0; i < m.size(); ++i) {
        NeighborhoodSet nb = d_neighborhood(g, m.edges[i].u, {d});
        for (NodeId x : nb.members) {
            member_to_indices[x].push_back(i);
            if (m.edges[i].pre_light) ++prelight_overlap[x];
        }
    }
    for (const auto& [x, indices] : member_to_indices) {
        for (size_t a = 0; a < indices.size(); ++a) {
            for (size_t b = a + 1; b < indices.size(); ++b) {
                size_t i = indices[a], k = indices[b];
                double between = prefix[k] - prefix[i + 1];
                if (m.edges[k].weight < between) res.weight_chain_ok = false;
            }
        }
    }
    for (const auto& [x, overlap] : prelight_overlap)
        if (overlap > 3) res.overlap_bound_ok = false;

    res.adjacent_nodes = adjacent_node_count(path, init);
    res.x_star_forward = x_star_count(g, m, d);
    res.x_star_backward = x_star_count(g, m, d, true);

    double threshold = static_cast<double>(d) * static_cast<double>(res.ell) / 6.0;
    res.neighborhood_bound_ok = res.adjacent_nodes > threshold;
    if (2 * pre > res.ell && !(res.x_star_forward > threshold)) res.neighborhood_bound_ok = false;
    if (2 * post > res.ell && !(res.x_star_backward > threshold)) res.neighborhood_bound_ok = false;
    return res;
}

LemmaSummary lemma_harness(const WeightedGraph& g, const LemmaHarnessOptions& options) {
    if (options.d < 1) throw std::invalid_argument("lemma_harness: d must be >= 1");
    if (options.trials < 0) throw std::invalid_argument("lemma_harness: trials must be >= 0");
    LemmaSummary summary;
    summary.trials_requested = options.trials;
    if (options.trials == 0) return summary;
    if (g.node_count() < 2) throw std::invalid_argument("lemma_harness needs at least two nodes");

    Subgraph init = d_light_initialization(g, {options.d});

    struct TrialOutcome {
        bool vacuous = true;
        LemmaCheckResult check;
        NodeId s = -1, t = -1;
        uint64_t seed = 0;
    };
    std::vector<TrialOutcome> outcomes(static_cast<size_t>(options.trials));

    auto run_trial = [&](int trial) {
        TrialOutcome& out = outcomes[static_cast<size_t>(trial)];
        std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(trial + 1));
        out.seed = options.seed;
        std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
        for (int attempt = 0; attempt < options.resample_attempts; ++attempt) {
            NodeId s = pick(rng);
            NodeId t = pick(rng);
            if (s == t) continue;
            PathRecord path = shortest_path(g, s, t);
            if (missing_edges(path, init).empty()) continue;
            out.vacuous = false;
            out.s = s;
            out.t = t;
            out.check = run_lemma_checks(g, options.d, s, t);
            return;
        }
    };

    if (options.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int trial = 0; trial < options.trials; ++trial) run_trial(trial);
    } else {
        for (int trial = 0; trial < options.trials; ++trial) run_trial(trial);
    }

    summary.min_neighborhood_ratio = kInfDist;
    for (int trial = 0; trial < options.trials; ++trial) {
        const TrialOutcome& out = outcomes[static_cast<size_t>(trial)];
        if (out.vacuous) {
            ++summary.trials_vacuous;
            continue;
        }
        ++summary.trials_run;
        const LemmaCheckResult& c = out.check;
        if (!c.weight_chain_ok) ++summary.weight_chain_violations;
        if (!c.count_bound_ok) ++summary.count_bound_violations;
        if (!c.overlap_bound_ok) ++summary.overlap_bound_violations;
        if (!c.neighborhood_bound_ok) ++summary.neighborhood_bound_violations;
        double threshold = static_cast<double>(options.d) * c.ell / 6.0;
        summary.min_neighborhood_ratio =
            std::min(summary.min_neighborhood_ratio, c.adjacent_nodes / threshold);
        if (!c.ok() && !options.witness_dir.empty()) {
            std::filesystem::create_directories(options.witness_dir);
            std::string file = options.witness_dir + "/witness_trial" + std::to_string(trial) + ".txt";
            write_witness(file, g, options.d, out.s, out.t, options.seed);
            summary.witness_files.push_back(file);
        }
    }
    if (summary.trials_run == 0) summary.min_neighborhood_ratio = 0.0;
    return summary;
}

void write_witness(const std::string& path, const WeightedGraph& g, int d, NodeId s, NodeId t,
                   uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write witness file: " + path);
    save_graph(g, out);
    out << "d=" << d << " s=" << s << " t=" << t << " seed=" << seed << '\n';
}

Witness read_witness(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open witness file: " + path);
    WeightedGraph g = load_graph(in);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("d=") == std::string::npos) continue;
        int d = 0;
        long long s = -1, t = -1;
        unsigned long long seed = 0;
        if (std::sscanf(line.c_str(), "d=%d s=%lld t=%lld seed=%llu", &d, &s, &t, &seed) == 4) {
            return Witness{std::move(g), d, static_cast<NodeId>(s), static_cast<NodeId>(t),
                           static_cast<uint64_t>(seed)};
        }
    }
    throw std::invalid_argument("witness file missing sidecar line: " + path);
}

}  // namespace wspan
