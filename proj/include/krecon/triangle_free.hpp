#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "krecon/graph.hpp"
#include "krecon/kset.hpp"
#include "krecon/partial_graph.hpp"

namespace krecon {

/// Neighborhood data around a high-degree vertex u: X = N(u), Y = N({u} + X), and a partial
/// graph knowing every pair that touches {u} + X + Y.
struct Kernel {
    VertexSet x;
    VertexSet y;
    PartialGraph h;
};

struct TfStats {
    std::uint64_t kernel_calls = 0;
    std::uint64_t kernel_skipped = 0;  // (u, xs) choices covered by an already verified neighborhood
    std::uint64_t local_graphs = 0;    // case-2 graphs on t + N(t)
    std::uint64_t candidates = 0;      // graphs produced before the final filter
    std::uint64_t probes = 0;
};

/// The unique triangle-free supergraph G of h consistent with the instance, connected, with
/// N_G(t) = N_h(t); std::nullopt if there is none.
///
/// Preconditions as for layer_single, plus every pair inside N_h[t] known (ContractError).
std::optional<Graph> tf_finish(Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t);
std::optional<Graph> tf_finish(const KSetInstance& inst, const PartialGraph& h, std::span<const Vertex> t);

/// Kernel around u assuming xs (2k-4 distinct vertices, u not among them) are neighbors of u in
/// a triangle-free consistent graph. std::nullopt when the probe answers contradict that
/// assumption. Requires k >= 3 (InvalidParameter).
std::optional<Kernel> tf_kernel(Oracle& oracle, Vertex u, std::span<const Vertex> xs);
std::optional<Kernel> tf_kernel(const KSetInstance& inst, Vertex u, std::span<const Vertex> xs);

/// tf_kernel followed by tf_finish with t = {u} + X.
std::optional<Graph> tf_large_degree(Oracle& oracle, Vertex u, std::span<const Vertex> xs);
std::optional<Graph> tf_large_degree(const KSetInstance& inst, Vertex u, std::span<const Vertex> xs);

/// Every connected triangle-free graph consistent with a complete instance, sorted by canonical
/// edge list. Throws UnsupportedInstance when n < k.
std::vector<Graph> tf_enumerate(const KSetInstance& inst, TfStats* stats = nullptr, ProbeLedger* ledger = nullptr);

}  // namespace krecon
