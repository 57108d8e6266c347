#include "krecon/uniqueness.hpp"

#include <algorithm>
#include <sstream>

#include "krecon/bounded_degree.hpp"
#include "krecon/errors.hpp"
#include "krecon/triangle_free.hpp"

namespace krecon {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.n()) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
}

// Component of `start` among the vertices not flagged in `removed`.
VertexSet component(const Graph& g, Vertex start, const std::vector<char>& removed) {
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    VertexSet out;
    while (!stack.empty()) {
        const Vertex a = stack.back();
        stack.pop_back();
        out.push_back(a);
        for (Vertex b = 0; b < g.n(); ++b)
            if (!seen[b] && !removed[b] && g.has_edge(a, b)) {
                seen[b] = 1;
                stack.push_back(b);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True iff S - x + w is disconnected for every x in S other than `keep`.
bool all_swaps_disconnected(const KSetInstance& inst, std::span<const Vertex> s, Vertex keep, Vertex w) {
    VertexSet swapped;
    for (Vertex x : s) {
        if (x == keep) continue;
        swapped.clear();
        for (Vertex y : s)
            if (y != x) swapped.push_back(y);
        swapped.push_back(w);
        std::sort(swapped.begin(), swapped.end());
        if (inst.classify(swapped) == Membership::Connected) return false;
    }
    return true;
}

std::string ids(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

}  // namespace

bool swap_property_holds(const Graph& g, int k, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v || !g.has_edge(u, v)) throw ContractError("swap_property_holds: uv must be an edge");
    const KSetInstance inst = connected_ksets(g, k);
    for (const VertexSet& s : inst.connected_sets()) {
        if (!contains(s, v) || contains(s, u)) continue;
        if (all_swaps_disconnected(inst, s, v, u)) return false;
    }
    return true;
}

bool clear_non_neighbors(const KSetInstance& inst, Vertex u, Vertex v) {
    if (!inst.is_complete()) throw ContractError("clear_non_neighbors: instance must be complete");
    if (u == v) throw InvalidParameter("clear_non_neighbors: u and v must differ");
    if (u < 0 || v < 0 || u >= inst.n() || v >= inst.n()) throw InvalidParameter("vertex out of range");
    for (const VertexSet& s : inst.connected_sets()) {
        const bool has_u = contains(s, u), has_v = contains(s, v);
        if (has_v && !has_u && all_swaps_disconnected(inst, s, v, u)) return true;
        if (has_u && !has_v && all_swaps_disconnected(inst, s, u, v)) return true;
    }
    return false;
}

std::optional<VertexSet> isolated_certificate(const Graph& g, Vertex u, int k) {
    check_vertex(g, u);
    std::vector<char> removed(g.n(), 0);
    removed[u] = 1;
    for (Vertex x : g.neighbors(u)) removed[x] = 1;
    std::vector<char> done = removed;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (done[s]) continue;
        VertexSet comp = component(g, s, removed);
        for (Vertex x : comp) done[x] = 1;
        if (static_cast<int>(comp.size()) >= k) return comp;
    }
    return std::nullopt;
}

namespace {

FakePairReport analyze_pair(const Graph& g, const KSetInstance& inst, int k, Vertex u, Vertex v) {
    FakePairReport r;
    r.u = u;
    r.v = v;
    r.clear = clear_non_neighbors(inst, u, v);
    std::vector<char> removed(g.n(), 0);
    for (Vertex x : g.neighbors(v)) removed[x] = 1;
    r.c_u = component(g, u, removed);
    std::fill(removed.begin(), removed.end(), 0);
    for (Vertex x : g.neighbors(u)) removed[x] = 1;
    r.c_v = component(g, v, removed);
    r.bound_ok = static_cast<int>(r.c_u.size()) <= k - 1 && static_cast<int>(r.c_v.size()) <= k - 1;
    if (!r.clear) {
        VertexSet both;
        std::set_union(r.c_u.begin(), r.c_u.end(), r.c_v.begin(), r.c_v.end(), std::back_inserter(both));
        if (static_cast<int>(both.size()) <= k - 1) {
            Graph w = g;
            w.add_edge(u, v);
            r.witness = std::move(w);
        }
    }
    return r;
}

}  // namespace

FakePairReport fake_neighbor_analysis(const Graph& g, int k, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v || g.has_edge(u, v)) throw ContractError("fake_neighbor_analysis: pair must be a non-edge");
    const Edge e = make_edge(u, v);
    FakePairReport r = analyze_pair(g, connected_ksets(g, k), k, e.first, e.second);
    if (r.clear) throw ContractError("fake_neighbor_analysis: pair is clear, not fake");
    return r;
}

std::vector<FakePairReport> analyze_pairs(const Graph& g, int k) {
    const KSetInstance inst = connected_ksets(g, k);
    std::vector<FakePairReport> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.push_back(analyze_pair(g, inst, k, u, v));
    return out;
}

std::string format_report(const FakePairReport& r) {
    std::ostringstream out;
    out << "pair " << r.u << ' ' << r.v << ": " << (r.clear ? "clear" : "fake") << " c_u=" << ids(r.c_u)
        << " c_v=" << ids(r.c_v) << " witness=" << (r.witness ? "yes" : "no");
    return out.str();
}

UniquenessResult certify_unique(const Graph& g, int k, const GraphClass& cls) {
    if (!g.is_connected()) throw InvalidParameter("certify_unique: graph must be connected");
    std::vector<Graph> found;
    const KSetInstance inst = connected_ksets(g, k);
    if (cls.kind == GraphClass::Kind::TriangleFree) {
        if (!g.is_triangle_free()) throw InvalidParameter("certify_unique: graph is not triangle-free");
        found = tf_enumerate(inst);
    } else {
        if (cls.max_degree < 1) throw InvalidParameter("certify_unique: max degree must be at least 1");
        if (g.max_degree() > cls.max_degree) throw InvalidParameter("certify_unique: graph exceeds the degree bound");
        found = bd_enumerate(inst, cls.max_degree);
    }
    UniquenessResult result;
    for (Graph& h : found)
        if (!(h == g)) result.others.push_back(std::move(h));
    result.unique = result.others.empty() && found.size() == 1;
    return result;
}

}  // namespace krecon
