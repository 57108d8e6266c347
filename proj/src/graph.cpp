#include "krecon/graph.hpp"

#include <algorithm>
#include <numeric>

#include "krecon/errors.hpp"

namespace krecon {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InvalidParameter("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidParameter("vertex id out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InvalidParameter("self-loop on vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
void Graph::remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

void Graph::set_edge(Vertex u, Vertex v, bool present) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u) * n_ + v] = present;
    adj_[static_cast<std::size_t>(v) * n_ + u] = present;
}

int Graph::degree(Vertex v) const {
    const auto* row = adj_.data() + static_cast<std::size_t>(v) * n_;
    return static_cast<int>(std::count(row, row + n_, 1));
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::size_t Graph::edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

VertexSet Graph::neighbors(Vertex v) const {
    VertexSet out;
    for (Vertex w = 0; w < n_; ++w)
        if (has_edge(v, w)) out.push_back(w);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<Vertex> all(n_);
    std::iota(all.begin(), all.end(), 0);
    return is_connected_subset(*this, all);
}

bool Graph::is_triangle_free() const {
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) continue;
            for (Vertex w = v + 1; w < n_; ++w)
                if (has_edge(u, w) && has_edge(v, w)) return false;
        }
    return true;
}

void Graph::set_label(Vertex v, std::string label) {
    if (v < 0 || v >= n_) throw InvalidParameter("label for vertex out of range: " + std::to_string(v));
    labels_[v] = std::move(label);
}

std::string Graph::key() const {
    std::string out;
    out.reserve(4 + static_cast<std::size_t>(n_) * n_ / 16);
    out.push_back(static_cast<char>(n_ & 0xff));
    out.push_back(static_cast<char>((n_ >> 8) & 0xff));
    unsigned char acc = 0;
    int bits = 0;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) {
            acc = static_cast<unsigned char>(acc | (has_edge(u, v) << bits));
            if (++bits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>(acc));
    return out;
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    const auto ea = a.edges();
    const auto eb = b.edges();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> s) {
    if (s.empty()) throw InvalidParameter("connectivity of an empty vertex set is undefined");
    for (Vertex v : s)
        if (v < 0 || v >= g.n()) throw InvalidParameter("vertex id out of range: " + std::to_string(v));
    return induces_connected(s, [&](Vertex a, Vertex b) { return g.has_edge(a, b); });
}

void canonicalize(std::vector<Graph>& graphs) {
    std::sort(graphs.begin(), graphs.end());
    graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
}

namespace graphs {

Graph path(std::span<const Vertex> order, int n) {
    Graph g(n);
    for (std::size_t i = 1; i < order.size(); ++i) g.add_edge(order[i - 1], order[i]);
    return g;
}

Graph path(int n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return path(order, n);
}

Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph pendant_pairs(int p, std::uint64_t leaf_edges) {
    Graph g(3 * p);
    for (int i = 0; i < p; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i, 3 * i + 2);
        if (i + 1 < p) g.add_edge(3 * i, 3 * (i + 1));
        if ((leaf_edges >> i) & 1u) g.add_edge(3 * i + 1, 3 * i + 2);
    }
    return g;
}

}  // namespace graphs

}  // namespace krecon
