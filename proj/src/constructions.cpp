#include "wspan/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "wspan/light_init.hpp"
#include "wspan/shortest_paths.hpp"

namespace wspan {

int stretch_multiplier(SpannerMode mode) {
    switch (mode) {
        case SpannerMode::Plus2W: return 2;
        case SpannerMode::Plus4W: return 4;
        case SpannerMode::Plus8W: return 8;
    }
    return 0;
}

const char* mode_name(SpannerMode mode) {
    switch (mode) {
        case SpannerMode::Plus2W: return "2w";
        case SpannerMode::Plus4W: return "4w";
        case SpannerMode::Plus8W: return "8w";
    }
    return "?";
}

namespace {

// Rounds up, but snaps values within 1e-9 of an integer first so that exact
// powers (e.g. 64^{3/2}) do not ceil past themselves.
int ceil_param(double x) {
    double r = std::round(x);
    if (std::abs(x - r) < 1e-9) return static_cast<int>(r);
    return static_cast<int>(std::ceil(x));
}

int clamp_param(int x, int lo, int hi) { return std::max(lo, std::min(hi, x)); }

ResolvedParams resolve_params(SpannerMode mode, NodeId n, size_t p, const ConstructionParams& user) {
    if (user.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    if (user.d && *user.d < 1) throw std::invalid_argument("d must be >= 1");
    if (user.ell && *user.ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (user.budget && *user.budget < 0) throw std::invalid_argument("budget must be >= 0");
    ResolvedParams rp;
    rp.max_rounds = user.max_rounds;
    rp.seed = user.seed;
    rp.demand_pairs = p;
    double pd = static_cast<double>(p);
    double nd = static_cast<double>(n);
    double d_exp = 0.0, ell_exp = 0.0;
    switch (mode) {
        case SpannerMode::Plus2W: d_exp = 1.0 / 3.0; ell_exp = 2.0 / 3.0; break;
        case SpannerMode::Plus4W: d_exp = 2.0 / 7.0; ell_exp = 5.0 / 7.0; break;
        case SpannerMode::Plus8W: d_exp = 1.0 / 4.0; ell_exp = 3.0 / 4.0; break;
    }
    rp.d = clamp_param(user.d ? *user.d : ceil_param(std::pow(pd, d_exp)), 1, std::max<NodeId>(1, n));
    rp.ell = clamp_param(user.ell ? *user.ell : ceil_param(nd / std::pow(pd, ell_exp)), 1,
                         std::max<NodeId>(1, n));
    long long b = user.budget
                      ? static_cast<long long>(*user.budget)
                      : static_cast<long long>(
                            std::floor(nd / (static_cast<double>(rp.d) * rp.d) + 1e-9));
    rp.budget = static_cast<int>(std::max(0LL, b));
    return rp;
}

struct MaskBuilder {
    std::vector<uint8_t> mask;
    explicit MaskBuilder(const WeightedGraph& g) : mask(static_cast<size_t>(g.edge_count()), 0) {}
    void add(EdgeId e) { mask[static_cast<size_t>(e)] = 1; }
    void merge(const std::vector<uint8_t>& other) {
        for (size_t i = 0; i < mask.size(); ++i) mask[i] |= other[i];
    }
};

/// Lazily filled per-source distance rows of the base graph.
class DistCache {
public:
    explicit DistCache(const WeightedGraph& g)
        : g_(&g), rows_(static_cast<size_t>(g.node_count())) {}
    const std::vector<double>& row(NodeId s) {
        auto& r = rows_[static_cast<size_t>(s)];
        if (r.empty()) r = sssp_distances(*g_, s);
        return r;
    }

private:
    const WeightedGraph* g_;
    std::vector<std::vector<double>> rows_;
};

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<NodeId> sample_nodes(NodeId n, double prob, std::mt19937_64& rng) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v)
        if (uniform01(rng) < prob) out.push_back(v);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> unsatisfied_pairs(
    const WeightedGraph& g, const std::vector<uint8_t>& mask,
    std::span<const std::pair<NodeId, NodeId>> pairs, double bound, DistCache& dg) {
    struct Group {
        NodeId source;
        std::vector<NodeId> targets;
        const std::vector<double>* dist_g = nullptr;
    };
    std::vector<Group> groups;
    for (auto [a, b] : pairs) {
        if (groups.empty() || groups.back().source != a) groups.push_back({a, {}, nullptr});
        groups.back().targets.push_back(b);
    }
    for (Group& grp : groups) grp.dist_g = &dg.row(grp.source);

    std::vector<std::vector<std::pair<NodeId, NodeId>>> bad(groups.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        const Group& grp = groups[gi];
        std::vector<double> dh = sssp_distances(g, mask.data(), grp.source);
        for (NodeId t : grp.targets) {
            size_t ti = static_cast<size_t>(t);
            if (!(dh[ti] <= (*grp.dist_g)[ti] + bound)) bad[gi].push_back({grp.source, t});
        }
    }
    std::vector<std::pair<NodeId, NodeId>> out;
    for (auto& v : bad) out.insert(out.end(), v.begin(), v.end());
    return out;
}

enum class TailPolicy { None, UpToBudget, All };

// Adds, in lexicographic pair order against the evolving mask: the whole
// canonical path when it misses at most ell edges, otherwise the first and
// last ell missing edges when the policy covers the pair.
void path_addition_phase(const WeightedGraph& g, MaskBuilder& H,
                         std::span<const std::pair<NodeId, NodeId>> pairs, int ell,
                         TailPolicy policy, int budget) {
    NodeId current_source = -1;
    CanonicalTree tree;
    std::vector<EdgeId> missing;
    for (auto [s, t] : pairs) {
        if (s != current_source) {
            tree = canonical_shortest_paths(g, s);
            current_source = s;
        }
        missing.clear();
        for (EdgeId e : tree.path_edges(t))
            if (!H.mask[static_cast<size_t>(e)]) missing.push_back(e);
        size_t miss = missing.size();
        if (miss == 0) continue;
        if (miss <= static_cast<size_t>(ell)) {
            for (EdgeId e : missing) H.add(e);
        } else if (policy == TailPolicy::All ||
                   (policy == TailPolicy::UpToBudget && miss <= static_cast<size_t>(budget))) {
            size_t k = std::min<size_t>(static_cast<size_t>(ell), miss);
            for (size_t i = 0; i < k; ++i) H.add(missing[i]);
            for (size_t i = miss - k; i < miss; ++i) H.add(missing[i]);
        }
    }
}

void add_shortest_path_tree(const WeightedGraph& g, NodeId root, MaskBuilder& H) {
    CanonicalTree tree = canonical_shortest_paths(g, root);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        EdgeId e = tree.parent_edge[static_cast<size_t>(v)];
        if (e != -1) H.add(e);
    }
}

std::optional<PathRecord> constrained_core(const WeightedGraph& g, const uint8_t* mask, NodeId src,
                                           NodeId dst, int budget) {
    size_t n = static_cast<size_t>(g.node_count());
    size_t layers = static_cast<size_t>(budget) + 1;
    auto idx = [n](NodeId node, int k) {
        return static_cast<size_t>(k) * n + static_cast<size_t>(node);
    };
    std::vector<double> dist(n * layers, kInfDist);
    std::vector<int64_t> par_state(n * layers, -1);
    std::vector<uint8_t> settled(n * layers, 0);

    using Item = std::tuple<double, int, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[idx(src, 0)] = 0.0;
    heap.push({0.0, 0, src});
    double best = kInfDist;
    int64_t best_state = -1;
    while (!heap.empty()) {
        auto [d, k, node] = heap.top();
        heap.pop();
        size_t si = idx(node, k);
        if (settled[si]) continue;
        settled[si] = 1;
        if (node == dst) {  // first settled target state is optimal in (dist, k)
            best = d;
            best_state = static_cast<int64_t>(si);
            break;
        }
        for (const AdjEntry& a : g.neighbors(node)) {
            int nk = mask[static_cast<size_t>(a.edge)] ? k : k + 1;
            if (nk > budget) continue;
            size_t ti = idx(a.to, nk);
            double ndv = d + a.weight;
            if (ndv < dist[ti]) {
                dist[ti] = ndv;
                par_state[ti] = static_cast<int64_t>(si);
                heap.push({ndv, nk, a.to});
            }
        }
    }
    if (best_state < 0) return std::nullopt;
    PathRecord rec;
    rec.total_weight = best;
    for (int64_t s = best_state; s != -1; s = par_state[static_cast<size_t>(s)])
        rec.nodes.push_back(static_cast<NodeId>(static_cast<size_t>(s) % n));
    std::reverse(rec.nodes.begin(), rec.nodes.end());
    return rec;
}

// Core of the +4W subset spanner: d-light init plus path additions for
// source pairs still violating the +4W bound. Stale subgraph distances are
// only ever overestimates, so a passing check never needs a refresh.
void subset_spanner_edges(const WeightedGraph& g, const std::vector<NodeId>& sources, int d,
                          MaskBuilder& H) {
    double bound = 4.0 * g.max_weight();
    H.merge(d_light_initialization(g, {d}).mask());
    for (size_t i = 0; i < sources.size(); ++i) {
        NodeId s = sources[i];
        if (i + 1 == sources.size()) break;
        CanonicalTree gtree = canonical_shortest_paths(g, s);
        std::vector<double> dh = sssp_distances(g, H.mask.data(), s);
        bool fresh = true;
        for (size_t j = i + 1; j < sources.size(); ++j) {
            NodeId t = sources[j];
            double limit = gtree.dist[static_cast<size_t>(t)] + bound;
            if (dh[static_cast<size_t>(t)] <= limit) continue;
            if (!fresh) {
                dh = sssp_distances(g, H.mask.data(), s);
                fresh = true;
                if (dh[static_cast<size_t>(t)] <= limit) continue;
            }
            for (EdgeId e : gtree.path_edges(t)) H.add(e);
            fresh = false;
        }
    }
}

void sampling_round(const WeightedGraph& g, SpannerMode mode, const ResolvedParams& rp,
                    std::vector<uint8_t>& mask, std::mt19937_64& rng,
                    std::vector<SampleSet>& samples) {
    NodeId n = g.node_count();
    MaskBuilder H(g);
    H.mask.swap(mask);
    double q_ld = std::min(1.0, 1.0 / (static_cast<double>(rp.ell) * static_cast<double>(rp.d)));
    switch (mode) {
        case SpannerMode::Plus2W: {
            std::vector<NodeId> r_set = sample_nodes(n, q_ld, rng);
            for (NodeId r : r_set) add_shortest_path_tree(g, r, H);
            samples.push_back({"R", std::move(r_set), q_ld, 0, 0});
            break;
        }
        case SpannerMode::Plus4W: {
            double q1 = std::min(1.0, static_cast<double>(rp.d) * rp.d / static_cast<double>(n));
            std::vector<NodeId> r1 = sample_nodes(n, q1, rng);
            for (NodeId r : r1) add_shortest_path_tree(g, r, H);
            samples.push_back({"R1", std::move(r1), q1, 0, 0});
            std::vector<NodeId> r2 = sample_nodes(n, q_ld, rng);
            for (size_t i = 0; i < r2.size(); ++i) {
                for (size_t j = i + 1; j < r2.size(); ++j) {
                    auto path = constrained_core(g, H.mask.data(), r2[i], r2[j], rp.budget);
                    if (!path) continue;  // no path within the missing-edge budget
                    for (size_t k = 0; k + 1 < path->nodes.size(); ++k) {
                        auto e = g.find_edge(path->nodes[k], path->nodes[k + 1]);
                        H.add(*e);
                    }
                }
            }
            samples.push_back({"R2", std::move(r2), q_ld, 0, 0});
            break;
        }
        case SpannerMode::Plus8W: {
            std::vector<NodeId> r_set = sample_nodes(n, q_ld, rng);
            if (!r_set.empty()) {
                int d_sub = clamp_param(
                    ceil_param(std::sqrt(static_cast<double>(r_set.size()))), 1, n);
                MaskBuilder sub(g);
                subset_spanner_edges(g, r_set, d_sub, sub);
                H.merge(sub.mask);
            }
            samples.push_back({"R", std::move(r_set), q_ld, 0, 0});
            break;
        }
    }
    mask.swap(H.mask);
}

struct BoostOutcome {
    int rounds = 0;
    std::vector<size_t> history;
    std::vector<SampleSet> samples;
};

BoostOutcome boost_core(const WeightedGraph& g, std::vector<uint8_t>& mask,
                        std::span<const std::pair<NodeId, NodeId>> pairs, double bound,
                        int max_rounds, std::mt19937_64& master, const RoundFn& round_fn,
                        DistCache& dg) {
    BoostOutcome out;
    std::vector<std::pair<NodeId, NodeId>> unsat = unsatisfied_pairs(g, mask, pairs, bound, dg);
    out.history.push_back(unsat.size());
    while (!unsat.empty()) {
        if (out.rounds >= max_rounds)
            throw ConstructionError("spanner construction exhausted max_rounds with " +
                                        std::to_string(unsat.size()) + " unsatisfied pairs",
                                    unsat);
        uint64_t round_seed = master();
        std::mt19937_64 rng(round_seed);
        size_t first_new = out.samples.size();
        round_fn(mask, rng, out.rounds + 1, out.samples);
        for (size_t i = first_new; i < out.samples.size(); ++i) {
            out.samples[i].seed = round_seed;
            out.samples[i].round = out.rounds + 1;
        }
        ++out.rounds;
        unsat = unsatisfied_pairs(g, mask, unsat, bound, dg);
        out.history.push_back(unsat.size());
    }
    return out;
}

SpannerResult assemble_result(const WeightedGraph& g, std::vector<uint8_t> mask, int multiplier,
                              double bound, ResolvedParams rp, BoostOutcome outcome,
                              const DemandPairSet& pairs) {
    SpannerResult res{Subgraph::from_mask(g, std::move(mask)),
                      multiplier,
                      bound,
                      rp,
                      std::move(outcome.samples),
                      outcome.rounds,
                      std::move(outcome.history),
                      {}};
    res.certificate = verify_stretch(g, res.spanner, pairs, bound);
    if (!res.certificate.pass) {
        std::vector<std::pair<NodeId, NodeId>> bad;
        for (const PairStretch& ps : res.certificate.pairs)
            if (!ps.satisfied) bad.push_back({ps.s, ps.t});
        throw ConstructionError("certificate re-verification failed", std::move(bad));
    }
    return res;
}

SpannerResult pairwise_core(const WeightedGraph& g, const DemandPairSet& pairs, SpannerMode mode,
                            const ConstructionParams& user) {
    if (!g.is_connected())
        throw std::invalid_argument("pairwise spanner requires a connected graph");
    if (pairs.empty())
        throw std::invalid_argument("pairwise spanner requires at least one demand pair");
    for (auto [a, b] : pairs.pairs()) {
        g.check_node(a);
        g.check_node(b);
    }
    ResolvedParams rp = resolve_params(mode, g.node_count(), pairs.size(), user);
    double bound = stretch_multiplier(mode) * g.max_weight();

    MaskBuilder H(g);
    H.merge(d_light_initialization(g, {rp.d}).mask());
    TailPolicy policy = mode == SpannerMode::Plus2W
                            ? TailPolicy::None
                            : (mode == SpannerMode::Plus4W ? TailPolicy::UpToBudget : TailPolicy::All);
    path_addition_phase(g, H, pairs.pairs(), rp.ell, policy, rp.budget);

    DistCache dg(g);
    std::mt19937_64 master(rp.seed);
    RoundFn round_fn = [&](std::vector<uint8_t>& mask, std::mt19937_64& rng, int,
                           std::vector<SampleSet>& samples) {
        sampling_round(g, mode, rp, mask, rng, samples);
    };
    BoostOutcome outcome = boost_core(g, H.mask, pairs.pairs(), bound, rp.max_rounds, master,
                                      round_fn, dg);
    return assemble_result(g, std::move(H.mask), stretch_multiplier(mode), bound, rp,
                           std::move(outcome), pairs);
}

}  // namespace

SpannerResult subset_spanner_4w(const WeightedGraph& g, const SourceSet& sources,
                                std::optional<int> d_override) {
    if (!g.is_connected()) throw std::invalid_argument("subset spanner requires a connected graph");
    if (sources.nodes.empty())
        throw std::invalid_argument("subset spanner requires a nonempty source set");
    for (NodeId v : sources.nodes) g.check_node(v);
    if (d_override && *d_override < 1) throw std::invalid_argument("d must be >= 1");
    int d = clamp_param(
        d_override ? *d_override : ceil_param(std::sqrt(static_cast<double>(sources.size()))), 1,
        g.node_count());

    MaskBuilder H(g);
    subset_spanner_edges(g, sources.nodes, d, H);

    std::vector<std::pair<NodeId, NodeId>> raw;
    for (size_t i = 0; i < sources.nodes.size(); ++i)
        for (size_t j = i + 1; j < sources.nodes.size(); ++j)
            raw.emplace_back(sources.nodes[i], sources.nodes[j]);
    DemandPairSet pairs = DemandPairSet::from_pairs(std::move(raw), g.node_count());

    ResolvedParams rp;
    rp.d = d;
    rp.ell = 0;  // not used by this construction
    rp.budget = 0;
    rp.max_rounds = 1;
    rp.seed = 0;
    rp.demand_pairs = pairs.size();
    return assemble_result(g, std::move(H.mask), 4, 4.0 * g.max_weight(), rp, {}, pairs);
}

SpannerResult pairwise_spanner_2w(const WeightedGraph& g, const DemandPairSet& pairs,
                                  const ConstructionParams& params) {
    return pairwise_core(g, pairs, SpannerMode::Plus2W, params);
}

SpannerResult pairwise_spanner_4w(const WeightedGraph& g, const DemandPairSet& pairs,
                                  const ConstructionParams& params) {
    return pairwise_core(g, pairs, SpannerMode::Plus4W, params);
}

SpannerResult pairwise_spanner_8w(const WeightedGraph& g, const DemandPairSet& pairs,
                                  const ConstructionParams& params) {
    return pairwise_core(g, pairs, SpannerMode::Plus8W, params);
}

SpannerResult all_pairs_spanner(const WeightedGraph& g, SpannerMode mode,
                                const ConstructionParams& params) {
    NodeId n = g.node_count();
    if (n < 2) throw std::invalid_argument("all-pairs spanner needs at least two nodes");
    double exponent = 0.0;
    switch (mode) {
        case SpannerMode::Plus2W: exponent = 3.0 / 2.0; break;
        case SpannerMode::Plus4W: exponent = 7.0 / 5.0; break;
        case SpannerMode::Plus8W: exponent = 4.0 / 3.0; break;
    }
    size_t p_star = static_cast<size_t>(ceil_param(std::pow(static_cast<double>(n), exponent)));
    ConstructionParams derived = params;
    ResolvedParams from_pstar = resolve_params(mode, n, p_star, params);
    if (!derived.d) derived.d = from_pstar.d;
    if (!derived.ell) derived.ell = from_pstar.ell;
    if (!derived.budget) derived.budget = from_pstar.budget;

    SpannerResult res = pairwise_core(g, DemandPairSet::all_pairs(n), mode, derived);
    res.params.demand_pairs = p_star;
    return res;
}

std::optional<PathRecord> constrained_shortest_path(const WeightedGraph& g, const Subgraph& h,
                                                    NodeId u, NodeId v, int budget) {
    if (&h.parent() != &g) throw std::invalid_argument("subgraph does not belong to this graph");
    g.check_node(u);
    g.check_node(v);
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");
    if (u == v) return PathRecord{{u}, 0.0};
    return constrained_core(g, h.mask().data(), u, v, budget);
}

SpannerResult boost_until_satisfied(const WeightedGraph& g, const Subgraph& start,
                                    const RoundFn& single_round, const DemandPairSet& pairs,
                                    double bound, int max_rounds, uint64_t seed) {
    if (&start.parent() != &g) throw std::invalid_argument("subgraph does not belong to this graph");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    for (auto [a, b] : pairs.pairs()) {
        g.check_node(a);
        g.check_node(b);
    }
    std::vector<uint8_t> mask = start.mask();
    DistCache dg(g);
    std::mt19937_64 master(seed);
    BoostOutcome outcome = boost_core(g, mask, pairs.pairs(), bound, max_rounds, master,
                                      single_round, dg);
    ResolvedParams rp;
    rp.max_rounds = max_rounds;
    rp.seed = seed;
    rp.demand_pairs = pairs.size();
    return assemble_result(g, std::move(mask), 0, bound, rp, std::move(outcome), pairs);
}

}  // namespace wspan
