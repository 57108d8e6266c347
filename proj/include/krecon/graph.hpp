#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "krecon/combinatorics.hpp"

namespace krecon {

/// Simple undirected labeled graph on vertices 0..n-1, stored as a dense adjacency matrix so
/// that pair probes are O(1). Optional display labels live in a sidecar map.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int n() const { return n_; }

    bool has_edge(Vertex u, Vertex v) const {
        return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void set_edge(Vertex u, Vertex v, bool present);

    int degree(Vertex v) const;
    int max_degree() const;
    std::size_t edge_count() const;
    VertexSet neighbors(Vertex v) const;
    /// Canonical edge list, lexicographically sorted (u < v in every pair).
    std::vector<Edge> edges() const;

    bool is_connected() const;
    bool is_triangle_free() const;

    const std::map<Vertex, std::string>& labels() const { return labels_; }
    void set_label(Vertex v, std::string label);

    /// Packed upper triangle; equal keys <=> equal vertex count and edge set.
    std::string key() const;

    /// Structural equality (labels ignored).
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }
    /// Orders by vertex count, then by the canonical edge list.
    friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

private:
    void check_pair(Vertex u, Vertex v) const;

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::map<Vertex, std::string> labels_;
};

bool is_connected_subset(const Graph& g, std::span<const Vertex> s);

/// Sorts and deduplicates by structure.
void canonicalize(std::vector<Graph>& graphs);

/// Building blocks used throughout tests, tools and the CLI.
namespace graphs {
Graph path(std::span<const Vertex> order, int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);  // center 0
/// Path u_1..u_p where each u_i gets two private leaves v_i, w_i (ids 3i, 3i+1, 3i+2);
/// `leaf_edges` selects which of the v_i w_i pairs are adjacent (bit i).
Graph pendant_pairs(int p, std::uint64_t leaf_edges = 0);
}  // namespace graphs

}  // namespace krecon
