#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace krecon {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free
using Edge = std::pair<Vertex, Vertex>;  // canonical: first < second

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Pascal table C(i, j) for i <= max_n, j <= max_k. Entries that overflow saturate at
/// kSaturated so callers can reject instances whose subset space does not fit 64 bits.
class Binomial {
public:
    static constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

    Binomial() = default;
    Binomial(int max_n, int max_k) : cols_(max_k + 1), table_((max_n + 1) * (max_k + 1), 0) {
        for (int i = 0; i <= max_n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= std::min(i, max_k); ++j) {
                const std::uint64_t a = at(i - 1, j - 1);
                const std::uint64_t b = j <= i - 1 ? at(i - 1, j) : 0;
                at(i, j) = (a == kSaturated || b == kSaturated || a > kSaturated - b) ? kSaturated : a + b;
            }
        }
    }

    std::uint64_t operator()(int i, int j) const {
        if (j < 0 || i < 0 || j > i || j >= cols_) return 0;
        return table_[static_cast<std::size_t>(i) * cols_ + j];
    }

private:
    std::uint64_t& at(int i, int j) { return table_[static_cast<std::size_t>(i) * cols_ + j]; }

    int cols_ = 0;
    std::vector<std::uint64_t> table_;
};

/// Visits every r-subset of `pool` in lexicographic order of positions. The callback receives a
/// span that is only valid during the call. A callback returning bool stops the walk on `false`;
/// the function returns false iff the walk was stopped.
template <class F>
bool for_each_subset(std::span<const Vertex> pool, int r, F&& f) {
    const int m = static_cast<int>(pool.size());
    if (r < 0 || r > m) return true;
    std::vector<int> idx(r);
    std::vector<Vertex> cur(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < r; ++i) cur[i] = pool[idx[i]];
        if constexpr (std::is_same_v<std::invoke_result_t<F&, std::span<const Vertex>>, bool>) {
            if (!f(std::span<const Vertex>(cur))) return false;
        } else {
            f(std::span<const Vertex>(cur));
        }
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Same as for_each_subset over the range 0..n-1.
template <class F>
bool for_each_subset(int n, int r, F&& f) {
    std::vector<Vertex> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    return for_each_subset(std::span<const Vertex>(pool), r, std::forward<F>(f));
}

/// True iff the vertices of `set` form one component under the pair predicate `adjacent`.
/// O(|set|^2) probes of `adjacent`, O(|set|) traversal.
template <class Adjacent>
bool induces_connected(std::span<const Vertex> set, Adjacent&& adjacent) {
    const int m = static_cast<int>(set.size());
    if (m <= 1) return true;
    // Small sets dominate every hot loop, so keep the frontier on the stack.
    constexpr int kInline = 32;
    unsigned char seen_inline[kInline];
    int stack_inline[kInline];
    std::vector<unsigned char> seen_heap;
    std::vector<int> stack_heap;
    unsigned char* seen = seen_inline;
    int* stack = stack_inline;
    if (m > kInline) {
        seen_heap.assign(m, 0);
        stack_heap.resize(m);
        seen = seen_heap.data();
        stack = stack_heap.data();
    } else {
        std::fill(seen, seen + m, 0);
    }
    int top = 0, reached = 1;
    seen[0] = 1;
    stack[top++] = 0;
    while (top > 0) {
        const int a = stack[--top];
        for (int b = 0; b < m; ++b) {
            if (!seen[b] && adjacent(set[a], set[b])) {
                seen[b] = 1;
                ++reached;
                stack[top++] = b;
            }
        }
    }
    return reached == m;
}

inline bool is_sorted_unique(std::span<const Vertex> s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline VertexSet sorted_set(std::span<const Vertex> s) {
    VertexSet out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool contains(std::span<const Vertex> sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace krecon
