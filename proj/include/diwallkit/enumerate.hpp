#pragma once

#include "diwallkit/didrawing.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace diwallkit {

struct MapFilter {
    bool allow_loops = false;
    bool allow_parallel = true;
    /// When false the maps are generated up to isomorphism of the underlying
    /// undirected map, each with one arbitrary orientation.
    bool directed = true;
};

/// Every connected spherical map with 1..max_edges edges up to isomorphism,
/// grown from a single vertex by pendant-edge and face-chord insertions.
std::vector<Didrawing> enumerate_connected_maps(int max_edges, MapFilter filter = {});

/// All 2^|E| orientations of a drawing, deduplicated up to map isomorphism.
std::vector<Didrawing> all_orientations(const Didrawing& g);

/// Same drawing with the listed edge reversed.
Didrawing reverse_edge(const Didrawing& g, int e);

/// A random connected loopless map with `edges` edges, grown by random
/// insertions; `pendant_bias` is the probability of attaching a new vertex.
Didrawing random_map(std::mt19937_64& rng, int edges, double pendant_bias = 0.35, bool allow_parallel = true);

} // namespace diwallkit
