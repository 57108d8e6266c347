#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krecon/graph.hpp"
#include "krecon/kset.hpp"

namespace krecon {

/// For the edge uv: every connected k-set S of g with v in S and u outside has some v' != v in
/// S such that S - v' + u is connected. Throws ContractError if uv is not an edge.
bool swap_property_holds(const Graph& g, int k, Vertex u, Vertex v);

/// Some connected k-set containing exactly one of u, v has every swap of another member for
/// the other endpoint disconnected. Throws InvalidParameter for u == v, ContractError for a
/// partial instance.
bool clear_non_neighbors(const KSetInstance& inst, Vertex u, Vertex v);

/// A component of g - N[u] with at least k vertices (the one with the smallest least id), or
/// std::nullopt. Every member is then a clear non-neighbor of u.
std::optional<VertexSet> isolated_certificate(const Graph& g, Vertex u, int k);

struct FakePairReport {
    Vertex u = 0;
    Vertex v = 0;
    bool clear = false;
    VertexSet c_u;  // component of u in g - N(v)
    VertexSet c_v;  // component of v in g - N(u)
    bool bound_ok = true;
    std::optional<Graph> witness;  // g + uv when |c_u + c_v| <= k - 1
};

/// Component structure of a fake (non-clear) non-adjacent pair. Throws ContractError when uv is
/// an edge or the pair is clear.
FakePairReport fake_neighbor_analysis(const Graph& g, int k, Vertex u, Vertex v);

/// Report for every non-adjacent pair u < v, clear or fake.
std::vector<FakePairReport> analyze_pairs(const Graph& g, int k);

/// `pair u v: clear|fake c_u={..} c_v={..} witness=yes|no`
std::string format_report(const FakePairReport& r);

struct GraphClass {
    enum class Kind { TriangleFree, BoundedDegree } kind = Kind::TriangleFree;
    int max_degree = 0;

    static GraphClass triangle_free() { return {}; }
    static GraphClass bounded_degree(int d) { return {Kind::BoundedDegree, d}; }
};

struct UniquenessResult {
    bool unique = false;
    std::vector<Graph> others;
};

/// Enumerates the class members consistent with g's own k-sets. Throws InvalidParameter if g is
/// disconnected or outside the class.
UniquenessResult certify_unique(const Graph& g, int k, const GraphClass& cls);

}  // namespace krecon
