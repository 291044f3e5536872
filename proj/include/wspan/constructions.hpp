#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "wspan/graph.hpp"
#include "wspan/verify.hpp"

namespace wspan {

enum class SpannerMode { Plus2W, Plus4W, Plus8W };

int stretch_multiplier(SpannerMode mode);
const char* mode_name(SpannerMode mode);

/// User-facing knobs. Unset values are derived from the demand-pair count:
/// d and ell follow the per-mode parameter formulas, budget defaults to
/// floor(n / d^2). Everything is clamped to a valid range.
struct ConstructionParams {
    std::optional<int> d;
    std::optional<int> ell;
    std::optional<int> budget;
    int max_rounds = 64;
    uint64_t seed = 0;
};

struct ResolvedParams {
    int d = 1;
    int ell = 1;
    int budget = 0;
    int max_rounds = 64;
    uint64_t seed = 0;
    size_t demand_pairs = 0;  // distinct pairs used for the parameter formulas
};

struct SampleSet {
    std::string label;  // which sample this is (R, R1, R2, subset-R)
    std::vector<NodeId> nodes;
    double probability = 0.0;
    uint64_t seed = 0;
    int round = 0;
};

struct SpannerResult {
    Subgraph spanner;
    int multiplier = 0;        // c in {2, 4, 8}
    double stretch_bound = 0;  // c * W
    ResolvedParams params;
    std::vector<SampleSet> samples;
    int rounds = 0;
    /// Unsatisfied-pair counts: entry 0 after the deterministic phase, then
    /// one entry per sampling round. Non-increasing.
    std::vector<size_t> unsatisfied_per_round;
    StretchReport certificate;
};

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& msg, std::vector<std::pair<NodeId, NodeId>> pairs)
        : std::runtime_error(msg), unsatisfied(std::move(pairs)) {}
    std::vector<std::pair<NodeId, NodeId>> unsatisfied;
};

/// Deterministic +4W spanner for all pairs within the source set; pairs are
/// processed in lexicographic order with the distance condition rechecked
/// against the current spanner right before each potential path addition.
/// Default budget is ceil(sqrt(|S|)).
SpannerResult subset_spanner_4w(const WeightedGraph& g, const SourceSet& sources,
                                std::optional<int> d_override = {});

SpannerResult pairwise_spanner_2w(const WeightedGraph& g, const DemandPairSet& pairs,
                                  const ConstructionParams& params = {});
SpannerResult pairwise_spanner_4w(const WeightedGraph& g, const DemandPairSet& pairs,
                                  const ConstructionParams& params = {});
SpannerResult pairwise_spanner_8w(const WeightedGraph& g, const DemandPairSet& pairs,
                                  const ConstructionParams& params = {});

/// Runs the matching pairwise construction over every unordered pair, with
/// d and ell derived from the mode's pair-count threshold (n^{3/2}, n^{7/5},
/// n^{4/3}) instead of the literal pair count. Explicit values in params
/// still win.
SpannerResult all_pairs_spanner(const WeightedGraph& g, SpannerMode mode,
                                const ConstructionParams& params = {});

/// Minimum-weight u-v path among paths missing at most `budget` edges from
/// h, or nothing when no such path exists. Ties are resolved
/// deterministically: fewer missing edges first, then discovery order under
/// id-sorted adjacency. Label-setting over (node, missing-count) states.
std::optional<PathRecord> constrained_shortest_path(const WeightedGraph& g, const Subgraph& h,
                                                    NodeId u, NodeId v, int budget);

/// One sampling round: add edges to the mask using the supplied rng, and
/// describe any node samples taken. Must be demand-oblivious: random choices
/// may depend on the pair count but not on which pairs are in the demand
/// set.
using RoundFn =
    std::function<void(std::vector<uint8_t>& mask, std::mt19937_64& rng, int round,
                       std::vector<SampleSet>& samples)>;

/// Repeats single_round with fresh seeds, unioning everything it adds and
/// re-verifying the still-unsatisfied pairs after each round, until every
/// pair meets dist_H <= dist_G + bound or max_rounds is exhausted (which
/// raises ConstructionError carrying the unsatisfied pairs).
SpannerResult boost_until_satisfied(const WeightedGraph& g, const Subgraph& start,
                                    const RoundFn& single_round, const DemandPairSet& pairs,
                                    double bound, int max_rounds, uint64_t seed);

}  // namespace wspan
