#pragma once

#include <string>
#include <vector>

#include "wspan/graph.hpp"

namespace wspan {

enum class Exec { Serial, Parallel };

struct PairStretch {
    NodeId s = -1;
    NodeId t = -1;
    double dist_g = 0.0;
    double dist_h = 0.0;
    double error = 0.0;  // dist_h - dist_g, >= 0
    bool satisfied = false;
};

struct StretchReport {
    std::vector<PairStretch> pairs;
    double bound = 0.0;
    double max_error = 0.0;
    bool pass = false;
};

/// Exact per-pair stretch check dist_h <= dist_g + bound. No sampling; every
/// distance comes from a full shortest-path run. The parallel mode fans the
/// per-source runs out over threads and is bit-identical to serial.
StretchReport verify_stretch(const WeightedGraph& g, const Subgraph& h, const DemandPairSet& pairs,
                             double bound, Exec exec = Exec::Parallel);

/// True iff some h-neighbor v' of v satisfies dist_h(s, v') == dist_g(s, v').
bool near_connected(const WeightedGraph& g, const Subgraph& h, NodeId s, NodeId v);

/// All-pairs distances by repeated edge relaxation (Bellman-Ford rounds).
/// Deliberately shares no code with the Dijkstra implementations; serves as
/// the independent oracle and the serial reference for the parallel kernels.
/// Refuses graphs larger than node_cap.
std::vector<std::vector<double>> brute_force_distances(const WeightedGraph& g, NodeId node_cap = 512);
std::vector<std::vector<double>> brute_force_distances(const Subgraph& h, NodeId node_cap = 512);

/// All-pairs distance table via one Dijkstra run per source.
std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g, Exec exec = Exec::Parallel);
std::vector<std::vector<double>> all_pairs_distances(const Subgraph& h, Exec exec = Exec::Parallel);

/// Largest number of path nodes any single node is adjacent to in g.
/// On unit-weight graphs this is at most 3 for shortest paths.
int max_path_adjacency(const WeightedGraph& g, const PathRecord& path);

struct LemmaCheckResult {
    int ell = 0;
    bool weight_chain_ok = true;     // w_k >= sum of strictly-between missing weights when neighborhoods meet
    bool count_bound_ok = true;      // pre + post >= ell + 1
    bool overlap_bound_ok = true;    // any node in at most 3 pre-light d-neighborhoods
    bool neighborhood_bound_ok = true;  // adjacent nodes > d*ell/6, and same for the majority-side X*
    int adjacent_nodes = 0;
    int x_star_forward = 0;
    int x_star_backward = 0;
    int prelight = 0;
    int postlight = 0;
    bool ok() const {
        return weight_chain_ok && count_bound_ok && overlap_bound_ok && neighborhood_bound_ok;
    }
};

/// Runs every structural check for one (graph, d, s, t) instance against the
/// d-light initialization. Exposed so serialized witnesses can be replayed.
LemmaCheckResult run_lemma_checks(const WeightedGraph& g, int d, NodeId s, NodeId t);

struct LemmaHarnessOptions {
    int d = 2;
    int trials = 100;
    uint64_t seed = 0;
    std::string witness_dir;  // empty: violations are recorded but not serialized
    Exec exec = Exec::Parallel;
    int resample_attempts = 64;  // per trial, to find a pair with missing edges
};

struct LemmaSummary {
    int trials_requested = 0;
    int trials_run = 0;       // trials that found a pair with >= 1 missing edge
    int trials_vacuous = 0;   // no qualifying pair found; nothing to check
    int weight_chain_violations = 0;
    int count_bound_violations = 0;
    int overlap_bound_violations = 0;
    int neighborhood_bound_violations = 0;
    double min_neighborhood_ratio = 0.0;  // min over trials of adjacent/(d*ell/6)
    std::vector<std::string> witness_files;
    bool pass() const {
        return weight_chain_violations == 0 && count_bound_violations == 0 &&
               overlap_bound_violations == 0 && neighborhood_bound_violations == 0;
    }
};

LemmaSummary lemma_harness(const WeightedGraph& g, const LemmaHarnessOptions& options);

struct Witness {
    WeightedGraph graph;
    int d = 0;
    NodeId s = -1;
    NodeId t = -1;
    uint64_t seed = 0;
};

/// Witness files are the edge-list format followed by a sidecar line
/// "d=<int> s=<id> t=<id> seed=<u64>".
void write_witness(const std::string& path, const WeightedGraph& g, int d, NodeId s, NodeId t,
                   uint64_t seed);
Witness read_witness(const std::string& path);

}  // namespace wspan
