#include "local_search.hpp"

#include <algorithm>

#include "krecon/errors.hpp"

namespace krecon::detail {

namespace {

class LocalSearch {
public:
    LocalSearch(const KSetInstance& inst, const LocalSearchSpec& spec,
                const std::function<bool(const LocalAdjacency&)>& visit)
        : inst_(inst), spec_(spec), visit_(visit), m_(static_cast<int>(spec.order.size())),
          adj_(static_cast<std::size_t>(m_) * m_, 0), deg_(m_, 0) {}

    std::uint64_t run() {
        if (m_ == 0) {
            visit_(adj_);
        } else if (column_ok(0)) {
            descend(0, 1);
        }
        return nodes_;
    }

private:
    bool at(int a, int b) const { return adj_[static_cast<std::size_t>(a) * m_ + b] != 0; }
    void put(int a, int b, std::uint8_t value) {
        adj_[static_cast<std::size_t>(a) * m_ + b] = value;
        adj_[static_cast<std::size_t>(b) * m_ + a] = value;
    }

    // Checks that only become decidable once every pair inside positions 0..j is fixed.
    bool column_ok(int j) {
        if (j >= spec_.seed_size) {
            bool linked = false;
            for (int s = 0; s < spec_.seed_size && !linked; ++s) linked = at(s, j);
            if (!linked) return false;
        }
        const int k = inst_.k();
        if (j + 1 < k) return true;
        std::vector<int> pos(k);
        VertexSet ids(k);
        auto adjacent = [&](Vertex a, Vertex b) { return at(a, b); };
        // The walk stops at the first k-subset whose connectivity disagrees with the instance.
        return for_each_subset(j, k - 1, [&](std::span<const Vertex> rest) {
            std::copy(rest.begin(), rest.end(), pos.begin());
            pos[k - 1] = j;
            for (int i = 0; i < k; ++i) ids[i] = spec_.order[pos[i]];
            std::sort(ids.begin(), ids.end());
            const bool want = inst_.classify_rank(inst_.rank(ids)) == Membership::Connected;
            return want == induces_connected(std::span<const Vertex>(pos), adjacent);
        });
    }

    // Returns false when the visitor asked to stop.
    bool descend(int i, int j) {
        if (j == m_) return visit_(adj_);
        ++nodes_;
        const int ni = i + 1 == j ? 0 : i + 1;
        const int nj = i + 1 == j ? j + 1 : j;
        const bool closes_column = i + 1 == j;
        for (std::uint8_t value : {std::uint8_t{0}, std::uint8_t{1}}) {
            if (value) {
                if (deg_[i] >= spec_.max_degree || deg_[j] >= spec_.max_degree) continue;
                if (spec_.triangle_free) {
                    bool triangle = false;
                    for (int x = 0; x < i && !triangle; ++x) triangle = at(x, i) && at(x, j);
                    if (triangle) continue;
                }
                put(i, j, 1);
                ++deg_[i];
                ++deg_[j];
            }
            bool keep_going = true;
            if (!closes_column || column_ok(j)) keep_going = descend(ni, nj);
            if (value) {
                put(i, j, 0);
                --deg_[i];
                --deg_[j];
            }
            if (!keep_going) return false;
        }
        return true;
    }

    const KSetInstance& inst_;
    const LocalSearchSpec& spec_;
    const std::function<bool(const LocalAdjacency&)>& visit_;
    int m_;
    LocalAdjacency adj_;
    std::vector<int> deg_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t enumerate_local_graphs(const KSetInstance& inst, const LocalSearchSpec& spec,
                                     const std::function<bool(const LocalAdjacency&)>& visit) {
    if (spec.seed_size < 0 || spec.seed_size > static_cast<int>(spec.order.size()))
        throw ContractError("local search: seed size out of range");
    return LocalSearch(inst, spec, visit).run();
}

}  // namespace krecon::detail
