#pragma once

#include <cstdint>
#include <random>

#include "wspan/graph.hpp"

namespace wspan {

struct RandomGraphOptions {
    NodeId n = 2;
    EdgeId m = 1;
    double w_max = 1.0;
    /// Weight shaping: a uniform draw u in [0,1) maps to w_max * (1-u)^power,
    /// so power 1 is uniform on (0, w_max] and larger powers skew light.
    double power = 1.0;
    int max_attempts = 1000;  // connectivity rejection-resampling cap
};

/// Uniform random simple graph on n nodes and m distinct edges, resampled
/// until connected. Deterministic per seed.
WeightedGraph random_connected_graph(const RandomGraphOptions& options, uint64_t seed);

WeightedGraph grid_graph(int rows, int cols, double w_max, uint64_t seed);

/// p distinct unordered pairs, sampled uniformly. p must not exceed n(n-1)/2.
DemandPairSet random_pairs(NodeId n, size_t p, uint64_t seed);

/// count distinct nodes sampled uniformly from 0..n-1.
SourceSet random_sources(NodeId n, size_t count, uint64_t seed);

/// Deterministic uniform double in [0, 1) from the generator's raw bits.
double uniform_unit(std::mt19937_64& rng);

}  // namespace wspan
