#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "krecon/kset.hpp"
#include "krecon/partial_graph.hpp"

namespace krecon {

/// BFS-style partition L_0 = T, L_1, ..., L_l of the vertices together with the refined partial
/// graph in which every pair spanning non-adjacent layers is a known non-edge and every pair
/// spanning layers (i, i+1), i >= 1, is known.
struct Layering {
    std::vector<VertexSet> layers;
    PartialGraph refined;
    std::uint64_t probes = 0;

    /// Index of the layer holding v, or -1.
    int layer_of(Vertex v) const;
    /// Union of layers 0..i.
    VertexSet prefix(int i) const;
};

/// Decides every unknown pair between N_h(t) and V - N_h[t]: for y in N_h(t) and x outside
/// N_h[t], the pair xy is an edge iff {x, y} plus a connected (k-2)-subset of t adjacent to y is
/// a connected k-set. Uses at most |V| * |N_h(t)| probes.
///
/// Preconditions (ContractError naming the failed one): complete instance, t connected in h over
/// known edges, |t| >= k - 1, N_h(t) non-empty.
PartialGraph layer_single(Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t);

/// Iterates layer_single outward from t until the layers cover V. Uses at most |V|^2 probes.
/// Same preconditions as layer_single; throws NoConnectedCompletion when some vertex is never
/// reached.
Layering build_layering(Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t);

/// `L<i>: ids...` per layer.
std::string dump_layering(const Layering& layering);

/// First `count` vertices discovered by a BFS over known edges of h restricted to `allowed`
/// (sorted), starting at `start` and expanding neighbors in increasing id order.
VertexSet bfs_prefix(const PartialGraph& h, std::span<const Vertex> allowed, Vertex start, int count);

}  // namespace krecon
