#include "krecon/partial_graph.hpp"

#include <algorithm>

#include "krecon/errors.hpp"

namespace krecon {

std::string to_string(PairState s) {
    switch (s) {
        case PairState::Edge: return "edge";
        case PairState::NonEdge: return "non-edge";
        case PairState::Unknown: return "unknown";
    }
    return "?";
}

PartialGraph::PartialGraph(int n, PairState fill) : n_(n) {
    if (n < 0) throw InvalidParameter("vertex count must be non-negative");
    state_.assign(static_cast<std::size_t>(n) * n, fill);
    // The diagonal is not a pair; keep it at NonEdge so known-edge scans can ignore it.
    for (Vertex v = 0; v < n; ++v) state_[index(v, v)] = PairState::NonEdge;
}

PartialGraph PartialGraph::from_graph(const Graph& g) {
    PartialGraph h(g.n(), PairState::NonEdge);
    for (auto [u, v] : g.edges()) h.set(u, v, PairState::Edge);
    return h;
}

void PartialGraph::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidParameter("vertex id out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InvalidParameter("pair with identical endpoints: " + std::to_string(u));
}

void PartialGraph::set(Vertex u, Vertex v, PairState s) {
    check_pair(u, v);
    state_[index(u, v)] = s;
    state_[index(v, u)] = s;
}

VertexSet PartialGraph::neighbors(Vertex v) const {
    VertexSet out;
    for (Vertex w = 0; w < n_; ++w)
        if (w != v && is_edge(v, w)) out.push_back(w);
    return out;
}

VertexSet PartialGraph::neighborhood(std::span<const Vertex> s) const {
    std::vector<char> mark(n_, 0);
    for (Vertex v : s) mark[v] = 1;
    VertexSet out;
    for (Vertex w = 0; w < n_; ++w) {
        if (mark[w]) continue;
        for (Vertex v : s)
            if (is_edge(v, w)) {
                out.push_back(w);
                break;
            }
    }
    return out;
}

VertexSet PartialGraph::closed_neighborhood(std::span<const Vertex> s) const {
    VertexSet out = neighborhood(s);
    out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

int PartialGraph::known_degree(Vertex v) const {
    int d = 0;
    for (Vertex w = 0; w < n_; ++w) d += (w != v && is_edge(v, w));
    return d;
}

std::vector<Edge> PartialGraph::pairs(PairState s) const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (state(u, v) == s) out.emplace_back(u, v);
    return out;
}

std::size_t PartialGraph::count(PairState s) const {
    std::size_t c = 0;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) c += state(u, v) == s;
    return c;
}

Graph PartialGraph::known_graph() const {
    Graph g(n_);
    for (auto [u, v] : pairs(PairState::Edge)) g.add_edge(u, v);
    return g;
}

Graph PartialGraph::to_graph() const {
    if (count(PairState::Unknown) != 0) throw ContractError("partial graph still has unknown pairs");
    return known_graph();
}

bool PartialGraph::is_refined_by(const PartialGraph& other) const {
    if (other.n_ != n_) return false;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) {
            const PairState mine = state(u, v);
            if (mine != PairState::Unknown && other.state(u, v) != mine) return false;
        }
    return true;
}

bool PartialGraph::admits(const Graph& g) const {
    if (g.n() != n_) return false;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) {
            const PairState s = state(u, v);
            if (s == PairState::Edge && !g.has_edge(u, v)) return false;
            if (s == PairState::NonEdge && g.has_edge(u, v)) return false;
        }
    return true;
}

void PartialGraph::audit() const {
    if (state_.size() != static_cast<std::size_t>(n_) * n_) throw ContractError("pair table has wrong size");
    for (Vertex u = 0; u < n_; ++u) {
        if (state(u, u) != PairState::NonEdge) throw ContractError("diagonal entry classified as a pair");
        for (Vertex v = u + 1; v < n_; ++v) {
            const PairState s = state(u, v);
            if (s != state(v, u)) throw ContractError("asymmetric pair classification");
            if (s != PairState::Edge && s != PairState::NonEdge && s != PairState::Unknown)
                throw ContractError("pair outside the three classes");
        }
    }
}

bool is_connected_subset(const PartialGraph& h, std::span<const Vertex> s) {
    if (s.empty()) throw InvalidParameter("connectivity of an empty vertex set is undefined");
    for (Vertex v : s)
        if (v < 0 || v >= h.n()) throw InvalidParameter("vertex id out of range: " + std::to_string(v));
    return induces_connected(s, [&](Vertex a, Vertex b) { return h.is_edge(a, b); });
}

}  // namespace krecon
