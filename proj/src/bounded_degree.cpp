#include "krecon/bounded_degree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "krecon/errors.hpp"
#include "krecon/layering.hpp"
#include "local_search.hpp"

namespace krecon {

int Skeleton::width() const {
    std::size_t w = 0;
    for (const auto& c : cells) w = std::max(w, c.size());
    return static_cast<int>(w);
}

std::uint64_t Skeleton::completion_count() const {
    std::uint64_t total = 1;
    for (const auto& c : collections) {
        if (c.empty()) return 0;
        if (total > Binomial::kSaturated / c.size()) return Binomial::kSaturated;
        total *= c.size();
    }
    return total;
}

void Skeleton::validate(int max_width) const {
    if (collections.size() != cells.size()) throw ContractError("skeleton: one collection per cell required");
    std::vector<int> owner(h.n(), -1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!is_sorted_unique(cells[c])) throw ContractError("skeleton: cell not sorted");
        for (Vertex v : cells[c]) {
            if (v < 0 || v >= h.n()) throw ContractError("skeleton: cell vertex out of range");
            if (owner[v] >= 0) throw ContractError("skeleton: cells overlap");
            owner[v] = static_cast<int>(c);
        }
    }
    if (width() > max_width) throw ContractError("skeleton: width exceeds the degree bound");
    for (Vertex a = 0; a < h.n(); ++a)
        for (Vertex b = a + 1; b < h.n(); ++b) {
            const bool inside = owner[a] >= 0 && owner[a] == owner[b];
            if (inside != h.is_unknown(a, b)) throw ContractError("skeleton: unknown pairs differ from cell pairs");
        }
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (const CellGraph& cg : collections[c])
            for (auto [a, b] : cg)
                if (owner[a] != static_cast<int>(c) || owner[b] != static_cast<int>(c))
                    throw ContractError("skeleton: collection edge leaves its cell");
}

bool edge_importance(std::span<const Vertex> s, const PartialGraph& h, Vertex u, Vertex v) {
    if (std::find(s.begin(), s.end(), u) == s.end() || std::find(s.begin(), s.end(), v) == s.end())
        throw ContractError("edge_importance: pair endpoints must lie in the set");
    if (u == v || !h.is_unknown(u, v)) throw ContractError("edge_importance: pair must be unknown");
    // Known-edge component of u inside s.
    std::vector<Vertex> stack{u};
    std::vector<Vertex> seen{u};
    while (!stack.empty()) {
        const Vertex a = stack.back();
        stack.pop_back();
        for (Vertex b : s)
            if (std::find(seen.begin(), seen.end(), b) == seen.end() && h.is_edge(a, b)) {
                seen.push_back(b);
                stack.push_back(b);
            }
    }
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
    return induces_connected(s, [&](Vertex a, Vertex b) { return !h.is_non_edge(a, b); });
}

namespace {

struct SetStatus {
    bool known_connected;   // over known edges
    bool could_connect;     // over every pair that is not a known non-edge
    std::vector<Edge> important;
};

SetStatus analyze(std::span<const Vertex> s, const PartialGraph& h) {
    SetStatus st;
    st.known_connected = induces_connected(s, [&](Vertex a, Vertex b) { return h.is_edge(a, b); });
    st.could_connect = induces_connected(s, [&](Vertex a, Vertex b) { return !h.is_non_edge(a, b); });
    if (st.known_connected || !st.could_connect) return st;
    // Label known-edge components, an unknown pair across two components is important.
    const int m = static_cast<int>(s.size());
    std::vector<int> comp(m, -1);
    for (int r = 0; r < m; ++r) {
        if (comp[r] >= 0) continue;
        std::vector<int> stack{r};
        comp[r] = r;
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < m; ++b)
                if (comp[b] < 0 && h.is_edge(s[a], s[b])) {
                    comp[b] = r;
                    stack.push_back(b);
                }
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (comp[a] != comp[b] && h.is_unknown(s[a], s[b])) st.important.push_back(make_edge(s[a], s[b]));
    return st;
}

class SkeletonBuilder {
public:
    SkeletonBuilder(const KSetInstance& inst, Oracle& oracle, int d, const BdOptions& options)
        : inst_(inst), oracle_(oracle), d_(d), k_(inst.k()), n_(inst.n()), options_(options) {}

    // Steps 2-4 for one step-1 graph; std::nullopt when the candidate dies.
    std::optional<Skeleton> build(const PartialGraph& h0, const VertexSet& t) {
        Layering lay;
        try {
            lay = build_layering(oracle_, h0, t);
        } catch (const NoConnectedCompletion&) {
            return std::nullopt;
        }
        h_ = std::move(lay.refined);
        if (!form_cells(lay)) return std::nullopt;
        if (!settle_outside_cells(lay)) return std::nullopt;
        settle_inside_cells();
        return finish();
    }

private:
    bool form_cells(const Layering& lay) {
        cells_.clear();
        owner_.assign(n_, -1);
        for (std::size_t i = 2; i < lay.layers.size(); ++i) {
            std::map<VertexSet, VertexSet> groups;
            for (Vertex v : lay.layers[i]) {
                VertexSet parents;
                for (Vertex p : lay.layers[i - 1])
                    if (h_.is_edge(v, p)) parents.push_back(p);
                groups[parents].push_back(v);
            }
            for (auto& [parents, members] : groups) {
                if (static_cast<int>(members.size()) > d_) return false;
                if (members.size() >= 2) cells_.push_back(members);
            }
        }
        std::sort(cells_.begin(), cells_.end());
        for (std::size_t c = 0; c < cells_.size(); ++c)
            for (Vertex v : cells_[c]) owner_[v] = static_cast<int>(c);
        return true;
    }

    bool in_same_cell(Vertex a, Vertex b) const { return owner_[a] >= 0 && owner_[a] == owner_[b]; }

    bool settle_outside_cells(const Layering& lay) {
        VertexSet probe;
        for (std::size_t i = 2; i < lay.layers.size(); ++i) {
            const VertexSet& cur = lay.layers[i];
            const VertexSet& prev = lay.layers[i - 1];
            const VertexSet& prev2 = lay.layers[i - 2];
            const VertexSet below = lay.prefix(static_cast<int>(i) - 2);
            for (std::size_t a = 0; a < cur.size(); ++a)
                for (std::size_t b = a + 1; b < cur.size(); ++b) {
                    const Vertex x = cur[a], y = cur[b];
                    if (!h_.is_unknown(x, y) || in_same_cell(x, y)) continue;
                    // Find w adjacent to one endpoint and not the other; the other is then isolated.
                    Vertex u = -1, v = -1, w = -1;
                    for (const auto& [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                        for (Vertex c : prev)
                            if (h_.is_edge(p, c) && !h_.is_edge(q, c)) {
                                u = p, v = q, w = c;
                                break;
                            }
                        if (w >= 0) break;
                    }
                    if (w < 0) return false;
                    const auto anchor =
                        std::find_if(prev2.begin(), prev2.end(), [&](Vertex z) { return h_.is_edge(z, w); });
                    if (anchor == prev2.end()) return false;
                    const VertexSet core = bfs_prefix(h_, below, *anchor, k_ - 3);
                    if (static_cast<int>(core.size()) != k_ - 3) return false;
                    probe = core;
                    probe.insert(probe.end(), {u, v, w});
                    h_.set(u, v, oracle_.is_connected(probe) ? PairState::Edge : PairState::NonEdge);
                }
        }
        return true;
    }

    // Tries to decide uv through a connected (k-1)-set around u that v cannot touch except via u.
    bool try_decide(Vertex u, Vertex v) {
        std::vector<char> allowed(n_, 0);
        allowed[u] = 1;
        for (Vertex x = 0; x < n_; ++x)
            if (x != v && x != u && h_.is_non_edge(v, x)) allowed[x] = 1;
        VertexSet group;
        std::deque<Vertex> queue{u};
        std::vector<char> seen(n_, 0);
        seen[u] = 1;
        while (!queue.empty() && static_cast<int>(group.size()) < k_ - 1) {
            const Vertex a = queue.front();
            queue.pop_front();
            group.push_back(a);
            for (Vertex b = 0; b < n_; ++b)
                if (allowed[b] && !seen[b] && h_.is_edge(a, b)) {
                    seen[b] = 1;
                    queue.push_back(b);
                }
        }
        if (static_cast<int>(group.size()) < k_ - 1) return false;
        group.push_back(v);
        h_.set(u, v, oracle_.is_connected(group) ? PairState::Edge : PairState::NonEdge);
        return true;
    }

    void settle_inside_cells() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (const VertexSet& cell : cells_) {
                for (std::size_t a = 0; a < cell.size() && !progress; ++a)
                    for (std::size_t b = a + 1; b < cell.size() && !progress; ++b) {
                        if (!h_.is_unknown(cell[a], cell[b])) continue;
                        progress = try_decide(cell[a], cell[b]) || try_decide(cell[b], cell[a]);
                    }
                if (progress) break;
            }
        }
    }

    std::optional<Skeleton> finish() {
        for (Vertex v = 0; v < n_; ++v)
            if (owner_[v] < 0 && h_.known_degree(v) > d_) return std::nullopt;

        // Bucket every k-set: sets without important pairs must already agree with the instance.
        std::vector<std::vector<std::pair<VertexSet, bool>>> checks(cells_.size());
        bool alive = true;
        for_each_subset(n_, k_, [&](std::span<const Vertex> s) {
            const bool connected = inst_.classify_rank(inst_.rank(s)) == Membership::Connected;
            const SetStatus st = analyze(s, h_);
            int home = -1;
            for (auto [a, b] : st.important) {
                if (!in_same_cell(a, b) || (home >= 0 && owner_[a] != home))
                    throw ContractError("bd_skeletons: important pairs of a k-set span several cells");
                home = owner_[a];
            }
            if (home < 0 && st.known_connected != connected) {
                alive = false;
                return false;
            }
            if (options_.rule == CellRule::Localized) {
                if (home >= 0) checks[home].emplace_back(VertexSet(s.begin(), s.end()), connected);
            } else {
                std::vector<char> hit(cells_.size(), 0);
                for (Vertex x : s)
                    if (owner_[x] >= 0 && !hit[owner_[x]]) {
                        hit[owner_[x]] = 1;
                        checks[owner_[x]].emplace_back(VertexSet(s.begin(), s.end()), connected);
                    }
            }
            return true;
        });
        if (!alive) return std::nullopt;

        Skeleton sk;
        sk.cells = cells_;
        for (std::size_t c = 0; c < cells_.size(); ++c) {
            sk.collections.push_back(collection(c, checks[c]));
            if (sk.collections.back().empty()) return std::nullopt;
        }
        sk.h = h_;
        for (const VertexSet& cell : cells_)
            for (std::size_t a = 0; a < cell.size(); ++a)
                for (std::size_t b = a + 1; b < cell.size(); ++b) sk.h.set(cell[a], cell[b], PairState::Unknown);
        return sk;
    }

    std::vector<CellGraph> collection(std::size_t c, const std::vector<std::pair<VertexSet, bool>>& checks) const {
        const VertexSet& cell = cells_[c];
        const int m = static_cast<int>(cell.size());
        std::vector<Edge> pairs;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) pairs.emplace_back(cell[a], cell[b]);
        std::vector<int> outside(m, 0);
        for (int a = 0; a < m; ++a)
            for (Vertex x = 0; x < n_; ++x)
                if (!contains(cell, x) && h_.is_edge(cell[a], x)) ++outside[a];

        std::vector<CellGraph> out;
        const std::uint32_t masks = 1u << pairs.size();
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            CellGraph g;
            bool fits = true;
            std::vector<int> deg = outside;
            for (std::size_t p = 0; p < pairs.size() && fits; ++p) {
                const bool on = (mask >> p) & 1u;
                const auto [a, b] = pairs[p];
                if (h_.is_known(a, b) && h_.is_edge(a, b) != on) fits = false;
                if (on) {
                    g.push_back(pairs[p]);
                    const auto ia = std::lower_bound(cell.begin(), cell.end(), a) - cell.begin();
                    const auto ib = std::lower_bound(cell.begin(), cell.end(), b) - cell.begin();
                    if (++deg[ia] > d_ || ++deg[ib] > d_) fits = false;
                }
            }
            if (!fits) continue;
            auto inside_edge = [&](Vertex a, Vertex b) {
                return std::binary_search(g.begin(), g.end(), make_edge(a, b));
            };
            const bool satisfied = std::all_of(checks.begin(), checks.end(), [&](const auto& check) {
                const auto& [s, connected] = check;
                return connected == induces_connected(s, [&](Vertex a, Vertex b) {
                           if (h_.is_known(a, b)) return h_.is_edge(a, b);
                           if (owner_[a] == static_cast<int>(c) && owner_[b] == static_cast<int>(c))
                               return inside_edge(a, b);
                           return !connected;  // unknown pair elsewhere: assume against the set
                       });
            });
            if (satisfied) out.push_back(std::move(g));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const KSetInstance& inst_;
    Oracle& oracle_;
    int d_, k_, n_;
    const BdOptions& options_;
    PartialGraph h_;
    std::vector<VertexSet> cells_;
    std::vector<int> owner_;
};

}  // namespace

std::vector<Skeleton> bd_skeletons(const KSetInstance& inst, int d, BdStats* stats, const BdOptions& options) {
    if (d < 1) throw InvalidParameter("max degree d must be at least 1");
    if (inst.n() < inst.k()) throw InvalidParameter("n < k");
    if (!inst.is_complete()) throw ContractError("bd_skeletons: instance must be complete");
    BdStats local;
    BdStats& st = stats ? *stats : local;
    const int n = inst.n();
    const int k = inst.k();
    std::vector<Skeleton> family;

    if (k == 2) {
        Graph g(n);
        for (const VertexSet& s : inst.connected_sets()) g.add_edge(s[0], s[1]);
        if (g.is_connected() && g.max_degree() <= d) family.push_back(Skeleton{PartialGraph::from_graph(g), {}, {}});
        st.skeletons = family.size();
        return family;
    }

    const auto connected = inst.connected_sets();
    if (connected.empty()) return family;
    Oracle oracle(inst, options.ledger);
    const VertexSet& t = connected.front();
    const VertexSet nbrs = neighborhood_of_set(oracle, t);
    const bool whole = static_cast<int>(t.size() + nbrs.size()) == n;
    if (nbrs.empty() && !whole) return family;

    detail::LocalSearchSpec spec;
    spec.order = t;
    spec.order.insert(spec.order.end(), nbrs.begin(), nbrs.end());
    spec.seed_size = k;
    spec.max_degree = d;
    const int m = static_cast<int>(spec.order.size());
    SkeletonBuilder builder(inst, oracle, d, options);
    detail::enumerate_local_graphs(inst, spec, [&](const detail::LocalAdjacency& adj) {
        ++st.local_graphs;
        PartialGraph h(n);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                h.set(spec.order[a], spec.order[b],
                      adj[static_cast<std::size_t>(a) * m + b] ? PairState::Edge : PairState::NonEdge);
        std::optional<Skeleton> sk;
        if (whole) {
            const Graph g = h.to_graph();
            if (is_consistent(g, inst)) sk = Skeleton{h, {}, {}};
        } else {
            sk = builder.build(h, t);
        }
        if (sk) {
            family.push_back(std::move(*sk));
        } else {
            ++st.discarded;
        }
        return true;
    });
    st.skeletons = family.size();
    st.probes = oracle.probes();
    return family;
}

CompletionCursor::CompletionCursor(const Skeleton& sk)
    : sk_(&sk), digits_(sk.collections.size(), 0), done_(sk.completion_count() == 0) {}

std::optional<Graph> CompletionCursor::next() {
    if (done_) return std::nullopt;
    Graph g = sk_->h.known_graph();
    for (std::size_t c = 0; c < digits_.size(); ++c)
        for (auto [a, b] : sk_->collections[c][digits_[c]]) g.add_edge(a, b);
    std::size_t pos = digits_.size();
    while (pos > 0) {
        --pos;
        if (++digits_[pos] < sk_->collections[pos].size()) break;
        digits_[pos] = 0;
        if (pos == 0) done_ = true;
    }
    if (digits_.empty()) done_ = true;
    return g;
}

std::vector<Graph> completions(const Skeleton& sk) {
    std::vector<Graph> out;
    CompletionCursor cursor(sk);
    while (auto g = cursor.next()) out.push_back(std::move(*g));
    return out;
}

std::vector<Graph> bd_enumerate(const KSetInstance& inst, int d, std::optional<std::size_t> limit, BdStats* stats,
                                const BdOptions& options) {
    const auto family = bd_skeletons(inst, d, stats, options);
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const Skeleton& sk : family) {
        CompletionCursor cursor(sk);
        while (auto g = cursor.next()) {
            if (!seen.insert(g->key()).second) continue;
            if (!g->is_connected() || g->max_degree() > d || !is_consistent(*g, inst)) continue;
            out.push_back(std::move(*g));
        }
    }
    canonicalize(out);
    if (limit && out.size() > *limit) out.resize(*limit);
    return out;
}

std::string serialize_skeletons(const std::vector<Skeleton>& family) {
    using nlohmann::json;
    auto pair_list = [](const std::vector<Edge>& edges) {
        json arr = json::array();
        for (auto [a, b] : edges) arr.push_back({a, b});
        return arr;
    };
    json doc;
    doc["skeletons"] = json::array();
    for (const Skeleton& sk : family) {
        json entry;
        entry["H"] = {{"n", sk.h.n()},
                      {"edges", pair_list(sk.h.pairs(PairState::Edge))},
                      {"non_edges", pair_list(sk.h.pairs(PairState::NonEdge))},
                      {"unknown", pair_list(sk.h.pairs(PairState::Unknown))}};
        entry["CELLS"] = sk.cells;
        json cols = json::array();
        for (const auto& col : sk.collections) {
            json members = json::array();
            for (const CellGraph& g : col) members.push_back(pair_list(g));
            cols.push_back(std::move(members));
        }
        entry["COLLECTIONS"] = std::move(cols);
        doc["skeletons"].push_back(std::move(entry));
    }
    return doc.dump(1) + "\n";
}

}  // namespace krecon
