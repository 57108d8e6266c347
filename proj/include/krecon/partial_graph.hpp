#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "krecon/combinatorics.hpp"
#include "krecon/graph.hpp"

namespace krecon {

enum class PairState : std::uint8_t { NonEdge = 0, Edge = 1, Unknown = 2 };

std::string to_string(PairState s);

/// Classification of every unordered vertex pair into known edge, known non-edge or unknown.
/// Connectivity and neighborhoods consider known edges only.
class PartialGraph {
public:
    PartialGraph() = default;
    explicit PartialGraph(int n, PairState fill = PairState::Unknown);
    static PartialGraph from_graph(const Graph& g);

    int n() const { return n_; }

    PairState state(Vertex u, Vertex v) const { return state_[index(u, v)]; }
    bool is_edge(Vertex u, Vertex v) const { return state(u, v) == PairState::Edge; }
    bool is_non_edge(Vertex u, Vertex v) const { return state(u, v) == PairState::NonEdge; }
    bool is_unknown(Vertex u, Vertex v) const { return state(u, v) == PairState::Unknown; }
    bool is_known(Vertex u, Vertex v) const { return state(u, v) != PairState::Unknown; }

    void set(Vertex u, Vertex v, PairState s);

    /// Known neighbors of v.
    VertexSet neighbors(Vertex v) const;
    /// Open neighborhood N_H(S) over known edges; `s` must be sorted.
    VertexSet neighborhood(std::span<const Vertex> s) const;
    /// Closed neighborhood N_H[S].
    VertexSet closed_neighborhood(std::span<const Vertex> s) const;
    int known_degree(Vertex v) const;

    std::vector<Edge> pairs(PairState s) const;
    std::size_t count(PairState s) const;

    /// Graph formed by the known edges.
    Graph known_graph() const;
    /// The unique graph when nothing is unknown; ContractError otherwise.
    Graph to_graph() const;

    /// H' refines this partial graph: known edges and non-edges kept, unknowns only shrink.
    bool is_refined_by(const PartialGraph& other) const;
    /// g agrees with every known pair.
    bool admits(const Graph& g) const;

    /// Re-checks the pair partition (symmetry, no diagonal entries). Throws ContractError.
    void audit() const;

    friend bool operator==(const PartialGraph&, const PartialGraph&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }
    void check_pair(Vertex u, Vertex v) const;

    int n_ = 0;
    std::vector<PairState> state_;
};

bool is_connected_subset(const PartialGraph& h, std::span<const Vertex> s);

}  // namespace krecon
