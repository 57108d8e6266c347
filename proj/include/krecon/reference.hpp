#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "krecon/graph.hpp"
#include "krecon/kset.hpp"

namespace krecon {

struct GraphFilter {
    bool connected = false;
    bool triangle_free = false;
    std::optional<int> max_degree;
};

inline constexpr int kBruteForceMaxVertices = 8;

/// Every labeled graph on inst.n() vertices that passes is_consistent and the filter, sorted by
/// canonical edge list. Depth-first over the pair bits with pruning as soon as a listed k-set is
/// fully decided. Refuses n > kBruteForceMaxVertices (InvalidParameter).
std::vector<Graph> brute_force_consistent(const KSetInstance& inst, const GraphFilter& filter = {});

/// Seeded connected triangle-free graph on n >= 2 vertices.
Graph random_triangle_free_connected(int n, std::uint64_t seed);

}  // namespace krecon
