#include "krecon/reference.hpp"

#include <algorithm>
#include <random>

#include "krecon/errors.hpp"

namespace krecon {

namespace {

class BruteForce {
public:
    BruteForce(const KSetInstance& inst, const GraphFilter& filter)
        : inst_(inst), filter_(filter), n_(inst.n()), g_(inst.n()), deg_(inst.n(), 0),
          cap_(filter.max_degree.value_or(inst.n())) {
        // by_top[j]: listed sets whose largest vertex is j, with their expected class
        by_top_.resize(n_);
        auto add = [&](std::uint64_t r, bool connected) {
            VertexSet s = inst_.unrank(r);
            by_top_[s.back()].push_back({std::move(s), connected});
        };
        if (inst_.is_complete()) {
            for_each_subset(n_, inst_.k(), [&](std::span<const Vertex> s) {
                const std::uint64_t r = inst_.rank(s);
                add(r, inst_.classify_rank(r) == Membership::Connected);
            });
        } else {
            for (std::uint64_t r : inst_.connected_ranks()) add(r, true);
            for (std::uint64_t r : inst_.disconnected_ranks()) add(r, false);
        }
    }

    std::vector<Graph> run() {
        if (n_ <= 1) {
            finish();
        } else if (column_ok(0)) {
            descend(0, 1);
        }
        return std::move(out_);
    }

private:
    struct Listed {
        VertexSet set;
        bool connected;
    };

    bool column_ok(int j) const {
        auto adjacent = [&](Vertex a, Vertex b) { return g_.has_edge(a, b); };
        for (const Listed& l : by_top_[j])
            if (induces_connected(l.set, adjacent) != l.connected) return false;
        return true;
    }

    void finish() {
        if (filter_.connected && !g_.is_connected()) return;
        out_.push_back(g_);
    }

    void descend(int i, int j) {
        if (j == n_) {
            finish();
            return;
        }
        const bool closes = i + 1 == j;
        const int ni = closes ? 0 : i + 1;
        const int nj = closes ? j + 1 : j;
        for (bool edge : {false, true}) {
            if (edge) {
                if (deg_[i] >= cap_ || deg_[j] >= cap_) continue;
                if (filter_.triangle_free) {
                    bool triangle = false;
                    for (int x = 0; x < n_ && !triangle; ++x)
                        triangle = x != i && x != j && g_.has_edge(x, i) && g_.has_edge(x, j);
                    if (triangle) continue;
                }
                g_.add_edge(i, j);
                ++deg_[i];
                ++deg_[j];
            }
            if (!closes || column_ok(j)) descend(ni, nj);
            if (edge) {
                g_.remove_edge(i, j);
                --deg_[i];
                --deg_[j];
            }
        }
    }

    const KSetInstance& inst_;
    const GraphFilter& filter_;
    int n_;
    Graph g_;
    std::vector<int> deg_;
    int cap_;
    std::vector<std::vector<Listed>> by_top_;
    std::vector<Graph> out_;
};

}  // namespace

std::vector<Graph> brute_force_consistent(const KSetInstance& inst, const GraphFilter& filter) {
    if (inst.n() > kBruteForceMaxVertices)
        throw InvalidParameter("brute_force_consistent is capped at n <= " + std::to_string(kBruteForceMaxVertices) +
                               " vertices, got n=" + std::to_string(inst.n()));
    if (filter.max_degree && *filter.max_degree < 0) throw InvalidParameter("max degree must be non-negative");
    auto out = BruteForce(inst, filter).run();
    canonicalize(out);
    return out;
}

Graph random_triangle_free_connected(int n, std::uint64_t seed) {
    if (n < 2) throw InvalidParameter("random_triangle_free_connected needs n >= 2");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<int> side(n);
    for (int& s : side) s = coin(rng);

    std::vector<Edge> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    const double target_degree = std::uniform_real_distribution<double>(1.5, 3.5)(rng);
    std::bernoulli_distribution cross(std::min(1.0, target_degree / std::max(1.0, n / 2.0)));
    std::bernoulli_distribution same(0.1 * std::min(1.0, target_degree / n));

    Graph g(n);
    for (auto [a, b] : pairs) {
        if (!(side[a] != side[b] ? cross(rng) : same(rng))) continue;
        bool triangle = false;
        for (Vertex x = 0; x < n && !triangle; ++x) triangle = g.has_edge(x, a) && g.has_edge(x, b);
        if (!triangle) g.add_edge(a, b);
    }

    // Join components with one edge each; an edge between components never closes a triangle.
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> members;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const Vertex a = stack.back();
            stack.pop_back();
            members[id].push_back(a);
            for (Vertex b = 0; b < n; ++b)
                if (comp[b] < 0 && g.has_edge(a, b)) {
                    comp[b] = id;
                    stack.push_back(b);
                }
        }
    }
    for (std::size_t c = 1; c < members.size(); ++c) {
        const std::size_t other = std::uniform_int_distribution<std::size_t>(0, c - 1)(rng);
        const auto pick = [&](const VertexSet& vs) {
            return vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        };
        const Vertex a = pick(members[c]);
        const Vertex b = pick(members[other]);
        g.add_edge(a, b);
    }
    return g;
}

}  // namespace krecon
