#include "krecon/layering.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "krecon/errors.hpp"

namespace krecon {

int Layering::layer_of(Vertex v) const {
    for (std::size_t i = 0; i < layers.size(); ++i)
        if (contains(layers[i], v)) return static_cast<int>(i);
    return -1;
}

VertexSet Layering::prefix(int i) const {
    VertexSet out;
    for (int j = 0; j <= i && j < static_cast<int>(layers.size()); ++j)
        out.insert(out.end(), layers[j].begin(), layers[j].end());
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet bfs_prefix(const PartialGraph& h, std::span<const Vertex> allowed, Vertex start, int count) {
    VertexSet out;
    if (count <= 0) return out;
    std::vector<char> seen(h.n(), 0);
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    while (!queue.empty() && static_cast<int>(out.size()) < count) {
        const Vertex a = queue.front();
        queue.pop_front();
        out.push_back(a);
        for (Vertex b : allowed)
            if (!seen[b] && h.is_edge(a, b)) {
                seen[b] = 1;
                queue.push_back(b);
            }
    }
    return out;
}

namespace {

void check_seed(const Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t, const char* op) {
    const std::string where = std::string(op) + ": ";
    if (!oracle.instance().is_complete()) throw ContractError(where + "instance must be complete");
    if (h.n() != oracle.n()) throw ContractError(where + "partial graph and instance sizes differ");
    if (t.empty()) throw ContractError(where + "seed set is empty");
    if (!is_sorted_unique(t)) throw ContractError(where + "seed set must be sorted and distinct");
    for (Vertex v : t)
        if (v < 0 || v >= h.n()) throw ContractError(where + "seed vertex out of range");
    if (static_cast<int>(t.size()) < oracle.k() - 1) throw ContractError(where + "seed set smaller than k-1");
    if (!is_connected_subset(h, t)) throw ContractError(where + "seed set not connected over known edges");
    if (h.neighborhood(t).empty()) throw ContractError(where + "seed set has an empty neighborhood");
}

// Body of layer_single without the precondition scan; `t` sorted, `nbrs` = N_h(t).
PartialGraph refine_from(Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t,
                         std::span<const Vertex> nbrs) {
    const std::uint64_t before = oracle.probes();
    const int k = oracle.k();
    PartialGraph out = h;
    std::vector<char> closed(h.n(), 0);
    for (Vertex v : t) closed[v] = 1;
    for (Vertex v : nbrs) closed[v] = 1;
    std::vector<Vertex> probe;
    for (Vertex y : nbrs) {
        Vertex anchor = -1;
        for (Vertex s : t)
            if (h.is_edge(s, y)) {
                anchor = s;
                break;
            }
        const VertexSet core = bfs_prefix(h, t, anchor, k - 2);
        if (static_cast<int>(core.size()) != k - 2) throw ContractError("layer_single: seed too small for probe core");
        for (Vertex x = 0; x < h.n(); ++x) {
            if (closed[x] || !h.is_unknown(x, y)) continue;
            probe.assign(core.begin(), core.end());
            probe.push_back(x);
            probe.push_back(y);
            out.set(x, y, oracle.is_connected(probe) ? PairState::Edge : PairState::NonEdge);
        }
    }
    if (ProbeLedger* ledger = oracle.ledger())
        ledger->record_layer_single(oracle.probes() - before,
                                    static_cast<std::uint64_t>(h.n()) * static_cast<std::uint64_t>(nbrs.size()));
    return out;
}

}  // namespace

PartialGraph layer_single(Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t) {
    check_seed(oracle, h, t, "layer_single");
    const VertexSet nbrs = h.neighborhood(t);
    return refine_from(oracle, h, t, nbrs);
}

Layering build_layering(Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t) {
    check_seed(oracle, h, t, "build_layering");
    const std::uint64_t before = oracle.probes();
    const int n = h.n();

    Layering result;
    result.refined = h;
    PartialGraph& cur = result.refined;
    {
        const VertexSet closed = h.closed_neighborhood(t);
        for (Vertex x : t)
            for (Vertex y = 0; y < n; ++y)
                if (!contains(closed, y) && cur.is_unknown(x, y)) cur.set(x, y, PairState::NonEdge);
    }

    VertexSet reached(t.begin(), t.end());
    result.layers.emplace_back(t.begin(), t.end());
    while (static_cast<int>(reached.size()) < n) {
        VertexSet next = cur.neighborhood(reached);
        if (next.empty()) break;
        result.layers.push_back(next);
        VertexSet grown;
        std::merge(reached.begin(), reached.end(), next.begin(), next.end(), std::back_inserter(grown));
        if (static_cast<int>(grown.size()) < n) cur = refine_from(oracle, cur, reached, next);
        reached = std::move(grown);
    }
    if (static_cast<int>(reached.size()) != n)
        throw NoConnectedCompletion("layering from the seed set reaches only " + std::to_string(reached.size()) +
                                    " of " + std::to_string(n) + " vertices");

    result.probes = oracle.probes() - before;
    if (ProbeLedger* ledger = oracle.ledger())
        ledger->record_build_layering(result.probes, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
    return result;
}

std::string dump_layering(const Layering& layering) {
    std::ostringstream out;
    for (std::size_t i = 0; i < layering.layers.size(); ++i) {
        out << 'L' << i << ':';
        for (Vertex v : layering.layers[i]) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace krecon
