#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "krecon/kset.hpp"

namespace krecon::detail {

/// Graphs F on a small vertex set W = seed + rest. `order` lists W with the seed first.
struct LocalSearchSpec {
    VertexSet order;
    int seed_size = 0;
    int max_degree = 0;
    bool triangle_free = false;
};

/// Adjacency of one local graph, indexed by positions in `order` (m*m, row-major).
using LocalAdjacency = std::vector<std::uint8_t>;

/// Backtracks over the pairs of W in colex order and reports every F with
///   - each non-seed vertex adjacent to some seed vertex,
///   - max degree <= spec.max_degree,
///   - no triangle (if requested),
///   - every k-subset of W connected in F iff the instance lists it as connected.
/// `visit` returns false to stop. Returns the number of search nodes expanded.
std::uint64_t enumerate_local_graphs(const KSetInstance& inst, const LocalSearchSpec& spec,
                                     const std::function<bool(const LocalAdjacency&)>& visit);

}  // namespace krecon::detail
