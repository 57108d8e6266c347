#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "krecon/graph.hpp"
#include "krecon/partial_graph.hpp"

namespace testing {

using krecon::Edge;
using krecon::Graph;
using krecon::Vertex;

inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e(edges);
    return Graph(n, e);
}

// Pair list in lexicographic order; bit i of a mask selects pairs[i].
inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
    return out;
}

template <class F>
void for_each_graph(int n, F&& f) {
    const auto pairs = all_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        f(g);
    }
}

inline krecon::PartialGraph partial(int n, std::initializer_list<Edge> edges, std::initializer_list<Edge> non_edges) {
    krecon::PartialGraph h(n);
    for (auto [u, v] : edges) h.set(u, v, krecon::PairState::Edge);
    for (auto [u, v] : non_edges) h.set(u, v, krecon::PairState::NonEdge);
    return h;
}

// Knows exactly the pairs of g inside `inside`; everything else unknown.
inline krecon::PartialGraph restrict_known(const Graph& g, const std::vector<Vertex>& inside) {
    krecon::PartialGraph h(g.n());
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
            h.set(inside[i], inside[j], g.has_edge(inside[i], inside[j]) ? krecon::PairState::Edge
                                                                         : krecon::PairState::NonEdge);
    return h;
}

}  // namespace testing
