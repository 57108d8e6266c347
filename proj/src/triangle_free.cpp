#include "krecon/triangle_free.hpp"

#include <algorithm>

#include "krecon/errors.hpp"
#include "krecon/layering.hpp"
#include "local_search.hpp"

namespace krecon {

namespace {

void require_complete(const Oracle& oracle, const char* op) {
    if (!oracle.instance().is_complete()) throw ContractError(std::string(op) + ": instance must be complete");
}

VertexSet with(VertexSet base, std::initializer_list<Vertex> extra) {
    base.insert(base.end(), extra);
    return base;
}

bool accepts(const Graph& g, const KSetInstance& inst) {
    return g.is_triangle_free() && g.is_connected() && is_consistent(g, inst);
}

}  // namespace

std::optional<Graph> tf_finish(Oracle& oracle, const PartialGraph& h, std::span<const Vertex> t) {
    require_complete(oracle, "tf_finish");
    if (t.empty() || !is_sorted_unique(t) || t.front() < 0 || t.back() >= h.n())
        throw ContractError("tf_finish: seed set must be sorted, distinct and in range");
    const VertexSet closed = h.closed_neighborhood(t);
    for (std::size_t a = 0; a < closed.size(); ++a)
        for (std::size_t b = a + 1; b < closed.size(); ++b)
            if (h.is_unknown(closed[a], closed[b]))
                throw ContractError("tf_finish: pair inside the closed neighborhood of the seed is unknown");

    Layering lay;
    try {
        lay = build_layering(oracle, h, t);
    } catch (const NoConnectedCompletion&) {
        return std::nullopt;
    }

    const int k = oracle.k();
    PartialGraph& g = lay.refined;
    VertexSet probe;
    for (std::size_t i = 2; i < lay.layers.size(); ++i) {
        const VertexSet& cur = lay.layers[i];
        const VertexSet& prev = lay.layers[i - 1];
        const VertexSet& prev2 = lay.layers[i - 2];
        const VertexSet below = lay.prefix(static_cast<int>(i) - 2);
        for (std::size_t a = 0; a < cur.size(); ++a) {
            const Vertex v = cur[a];
            const auto xv = std::find_if(prev.begin(), prev.end(), [&](Vertex x) { return g.is_edge(x, v); });
            if (xv == prev.end()) throw ContractError("tf_finish: layer vertex without a parent");
            const auto anchor = std::find_if(prev2.begin(), prev2.end(), [&](Vertex z) { return g.is_edge(z, *xv); });
            if (anchor == prev2.end()) throw ContractError("tf_finish: layer vertex without a parent");
            const VertexSet z = bfs_prefix(g, below, *anchor, k - 3);
            if (static_cast<int>(z.size()) != k - 3) throw ContractError("tf_finish: probe core too small");
            for (std::size_t b = a + 1; b < cur.size(); ++b) {
                const Vertex w = cur[b];
                if (!g.is_unknown(v, w)) continue;
                const bool shared =
                    std::any_of(prev.begin(), prev.end(), [&](Vertex x) { return g.is_edge(x, v) && g.is_edge(x, w); });
                if (shared) {
                    g.set(v, w, PairState::NonEdge);
                    continue;
                }
                probe = with(z, {v, w, *xv});
                g.set(v, w, oracle.is_connected(probe) ? PairState::Edge : PairState::NonEdge);
            }
        }
    }

    Graph out = g.to_graph();
    if (!out.is_triangle_free() || !is_consistent(out, oracle.instance())) return std::nullopt;
    return out;
}

std::optional<Graph> tf_finish(const KSetInstance& inst, const PartialGraph& h, std::span<const Vertex> t) {
    Oracle oracle(inst);
    return tf_finish(oracle, h, t);
}

std::optional<Kernel> tf_kernel(Oracle& oracle, Vertex u, std::span<const Vertex> xs) {
    require_complete(oracle, "tf_kernel");
    const int n = oracle.n();
    const int k = oracle.k();
    if (k < 3) throw InvalidParameter("tf_kernel needs k >= 3");
    if (u < 0 || u >= n) throw InvalidParameter("tf_kernel: vertex u out of range");
    if (static_cast<int>(xs.size()) != 2 * k - 4)
        throw InvalidParameter("tf_kernel: expected " + std::to_string(2 * k - 4) + " seed neighbors, got " +
                               std::to_string(xs.size()));
    const VertexSet z = sorted_set(xs);
    if (z.size() != xs.size()) throw InvalidParameter("tf_kernel: duplicate seed neighbor");
    if (z.front() < 0 || z.back() >= n) throw InvalidParameter("tf_kernel: seed neighbor out of range");
    if (contains(z, u)) throw InvalidParameter("tf_kernel: u listed among its own seed neighbors");

    VertexSet probe;
    std::vector<char> in_x(n, 0);
    for (Vertex x : z) in_x[x] = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (v == u || in_x[v]) continue;
        bool member = for_each_subset(z, k - 2, [&](std::span<const Vertex> part) {
            probe.assign(part.begin(), part.end());
            probe.push_back(v);
            probe.push_back(u);
            return oracle.is_connected(probe);
        });
        if (member)
            member = for_each_subset(z, k - 1, [&](std::span<const Vertex> part) {
                probe.assign(part.begin(), part.end());
                probe.push_back(v);
                return !oracle.is_connected(probe);
            });
        if (member) in_x[v] = 1;
    }

    Kernel kernel;
    kernel.h = PartialGraph(n);
    PartialGraph& h = kernel.h;
    for (Vertex v = 0; v < n; ++v)
        if (in_x[v]) kernel.x.push_back(v);
    const VertexSet& x = kernel.x;
    for (Vertex v = 0; v < n; ++v)
        if (v != u) h.set(u, v, in_x[v] ? PairState::Edge : PairState::NonEdge);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b) h.set(x[a], x[b], PairState::NonEdge);

    std::vector<char> mark(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (v == u || in_x[v]) continue;
        std::fill(mark.begin(), mark.end(), 0);
        bool reaches = false, any_disconnected = false;
        for_each_subset(x, k - 2, [&](std::span<const Vertex> part) {
            probe.assign(part.begin(), part.end());
            probe.push_back(v);
            probe.push_back(u);
            if (oracle.is_connected(probe)) {
                reaches = true;
            } else {
                any_disconnected = true;
                for (Vertex p : part) mark[p] = 1;  // non-neighbors of v
            }
        });
        if (!reaches) {
            for (Vertex p : x) h.set(v, p, PairState::NonEdge);
            continue;
        }
        kernel.y.push_back(v);
        std::vector<char> nbr(n, 0);
        bool any_t = false;
        for_each_subset(x, k - 1, [&](std::span<const Vertex> part) {
            probe.assign(part.begin(), part.end());
            probe.push_back(v);
            if (oracle.is_connected(probe)) {
                any_t = true;
                for (Vertex p : part) nbr[p] = 1;
            }
        });
        if (!any_t) {
            if (!any_disconnected) return std::nullopt;
            for (Vertex p : x) nbr[p] = !mark[p];
        }
        bool some = false;
        for (Vertex p : x) {
            h.set(v, p, nbr[p] ? PairState::Edge : PairState::NonEdge);
            some = some || nbr[p];
        }
        if (!some) return std::nullopt;
    }

    const VertexSet& y = kernel.y;
    auto x_neighbors = [&](Vertex v) {
        VertexSet out;
        for (Vertex p : x)
            if (h.is_edge(v, p)) out.push_back(p);
        return out;
    };
    std::vector<VertexSet> ny(y.size());
    for (std::size_t a = 0; a < y.size(); ++a) ny[a] = x_neighbors(y[a]);
    for (std::size_t a = 0; a < y.size(); ++a) {
        for (std::size_t b = a + 1; b < y.size(); ++b) {
            VertexSet common;
            std::set_intersection(ny[a].begin(), ny[a].end(), ny[b].begin(), ny[b].end(), std::back_inserter(common));
            if (!common.empty()) {
                h.set(y[a], y[b], PairState::NonEdge);
                continue;
            }
            // v must miss u, x_w and the fillers so that the probe hinges on vw alone.
            std::optional<bool> decided;
            for (const auto& [vi, wi] : {std::pair{a, b}, std::pair{b, a}}) {
                const Vertex v = y[vi], w = y[wi];
                const Vertex xw = ny[wi].front();
                if (k == 3) {
                    probe = {v, w, xw};
                } else {
                    VertexSet fillers;
                    for (Vertex p : x)
                        if (p != xw && !contains(ny[vi], p)) fillers.push_back(p);
                    if (static_cast<int>(fillers.size()) < k - 4) continue;
                    fillers.resize(k - 4);
                    probe = with(fillers, {u, v, w, xw});
                }
                decided = oracle.is_connected(probe);
                break;
            }
            if (!decided) return std::nullopt;
            h.set(y[a], y[b], *decided ? PairState::Edge : PairState::NonEdge);
        }
    }

    if (!y.empty()) {
        const VertexSet core = with(x, {u});
        h = layer_single(oracle, h, sorted_set(core));
    }
    return kernel;
}

std::optional<Kernel> tf_kernel(const KSetInstance& inst, Vertex u, std::span<const Vertex> xs) {
    Oracle oracle(inst);
    return tf_kernel(oracle, u, xs);
}

std::optional<Graph> tf_large_degree(Oracle& oracle, Vertex u, std::span<const Vertex> xs) {
    const auto kernel = tf_kernel(oracle, u, xs);
    if (!kernel) return std::nullopt;
    const VertexSet t = sorted_set(with(kernel->x, {u}));
    if (kernel->y.empty()) {
        if (static_cast<int>(t.size()) != oracle.n()) return std::nullopt;
        Graph g = kernel->h.to_graph();
        if (!g.is_triangle_free() || !is_consistent(g, oracle.instance())) return std::nullopt;
        return g;
    }
    return tf_finish(oracle, kernel->h, t);
}

std::optional<Graph> tf_large_degree(const KSetInstance& inst, Vertex u, std::span<const Vertex> xs) {
    Oracle oracle(inst);
    return tf_large_degree(oracle, u, xs);
}

std::vector<Graph> tf_enumerate(const KSetInstance& inst, TfStats* stats, ProbeLedger* ledger) {
    if (!inst.is_complete()) throw ContractError("tf_enumerate: instance must be complete");
    const int n = inst.n();
    const int k = inst.k();
    if (n < k) throw UnsupportedInstance("n < k");
    TfStats local;
    TfStats& st = stats ? *stats : local;

    std::vector<Graph> found;
    if (k == 2) {
        Graph g(n);
        for (const VertexSet& s : inst.connected_sets()) g.add_edge(s[0], s[1]);
        st.candidates = 1;
        if (g.is_connected() && g.is_triangle_free()) found.push_back(std::move(g));
        return found;
    }

    Oracle oracle(inst, ledger);

    // Case 1: some vertex u has degree >= 2k-4. Once a verified graph G has N_G(u) = X, every
    // xs inside X can only yield G again (at most one triangle-free answer per (u, xs)).
    std::vector<std::vector<VertexSet>> verified(n);
    VertexSet probe;
    for (Vertex u = 0; u < n; ++u) {
        VertexSet pool;
        for (Vertex v = 0; v < n; ++v)
            if (v != u) pool.push_back(v);
        for_each_subset(pool, 2 * k - 4, [&](std::span<const Vertex> xs) {
            for (const VertexSet& known : verified[u])
                if (std::includes(known.begin(), known.end(), xs.begin(), xs.end())) {
                    ++st.kernel_skipped;
                    return;
                }
            const bool star = for_each_subset(xs, k - 1, [&](std::span<const Vertex> part) {
                probe.assign(part.begin(), part.end());
                probe.push_back(u);
                return oracle.is_connected(probe);
            });
            if (!star) return;
            ++st.kernel_calls;
            if (auto g = tf_large_degree(oracle, u, xs)) {
                ++st.candidates;
                verified[u].push_back(g->neighbors(u));
                found.push_back(std::move(*g));
            }
        });
    }

    // Case 2: max degree <= 2k-5. Guess G[t + N(t)] around one connected k-set.
    const auto connected = inst.connected_sets();
    if (!connected.empty()) {
        const VertexSet& t = connected.front();
        const VertexSet nbrs = neighborhood_of_set(oracle, t);
        const int limit = 2 * k - 5;
        const bool whole = static_cast<int>(t.size() + nbrs.size()) == n;
        if ((!nbrs.empty() || whole) && static_cast<int>(nbrs.size()) <= k * limit) {
            detail::LocalSearchSpec spec;
            spec.order = t;
            spec.order.insert(spec.order.end(), nbrs.begin(), nbrs.end());
            spec.seed_size = k;
            spec.max_degree = limit;
            spec.triangle_free = true;
            const int m = static_cast<int>(spec.order.size());
            detail::enumerate_local_graphs(inst, spec, [&](const detail::LocalAdjacency& adj) {
                ++st.local_graphs;
                PartialGraph h(n);
                for (int a = 0; a < m; ++a)
                    for (int b = a + 1; b < m; ++b)
                        h.set(spec.order[a], spec.order[b],
                              adj[static_cast<std::size_t>(a) * m + b] ? PairState::Edge : PairState::NonEdge);
                std::optional<Graph> g;
                if (whole) {
                    g = h.to_graph();
                } else {
                    g = tf_finish(oracle, h, t);
                }
                if (g) {
                    ++st.candidates;
                    found.push_back(std::move(*g));
                }
                return true;
            });
        }
    }

    st.probes = oracle.probes();
    canonicalize(found);
    std::erase_if(found, [&](const Graph& g) { return !accepts(g, inst); });
    return found;
}

}  // namespace krecon
