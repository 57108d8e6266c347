#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "krecon/combinatorics.hpp"
#include "krecon/graph.hpp"
#include "krecon/partial_graph.hpp"

namespace krecon {

enum class Membership { Connected, Disconnected, Unlisted };

/// Connectivity answers for k-subsets of {0..n-1}.
///
/// A complete instance classifies every k-subset but stores only the connected family; a subset
/// is disconnected iff it is a valid k-subset missing from that family. A partial instance lists
/// both families explicitly and leaves every other subset unlisted.
///
/// Subsets are addressed internally by their colexicographic rank sum_i C(s_i, i + 1).
class KSetInstance {
public:
    KSetInstance() = default;

    static KSetInstance complete(int n, int k, std::span<const VertexSet> connected);
    static KSetInstance partial(int n, int k, std::span<const VertexSet> connected,
                                std::span<const VertexSet> disconnected);
    /// Ranks need not be sorted or unique.
    static KSetInstance from_ranks(int n, int k, bool complete, std::vector<std::uint64_t> connected,
                                   std::vector<std::uint64_t> disconnected = {});

    int n() const { return n_; }
    int k() const { return k_; }
    bool is_complete() const { return complete_; }
    /// C(n, k).
    std::uint64_t subset_count() const { return binom_(n_, k_); }

    std::size_t connected_count() const { return connected_.size(); }
    /// Explicit disconnected count for partial instances, implied count for complete ones.
    std::size_t disconnected_count() const;

    /// `s` must be a sorted k-subset of valid ids (InvalidParameter otherwise).
    Membership classify(std::span<const Vertex> s) const;
    Membership classify_rank(std::uint64_t rank) const;

    std::uint64_t rank(std::span<const Vertex> sorted) const;
    VertexSet unrank(std::uint64_t rank) const;

    const std::vector<std::uint64_t>& connected_ranks() const { return connected_; }
    const std::vector<std::uint64_t>& disconnected_ranks() const { return disconnected_; }

    /// Families in lexicographic order of their sorted vertex lists. For complete instances the
    /// disconnected family is materialized from the complement.
    std::vector<VertexSet> connected_sets() const;
    std::vector<VertexSet> disconnected_sets() const;

    friend bool operator==(const KSetInstance& a, const KSetInstance& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.complete_ == b.complete_ && a.connected_ == b.connected_ &&
               a.disconnected_ == b.disconnected_;
    }

private:
    KSetInstance(int n, int k, bool complete);
    void validate_set(std::span<const Vertex> s) const;
    void finalize();

    int n_ = 0;
    int k_ = 0;
    bool complete_ = true;
    Binomial binom_;
    std::vector<std::uint64_t> connected_;
    std::vector<std::uint64_t> disconnected_;
    std::vector<std::uint64_t> dense_;  // bitmap over ranks, complete instances of moderate size
};

/// Per-operation probe statistics, checked against the documented query bounds.
struct ProbeLedger {
    std::uint64_t layer_single_calls = 0;
    std::uint64_t layer_single_violations = 0;
    std::uint64_t build_layering_calls = 0;
    std::uint64_t build_layering_violations = 0;
    double worst_layer_single_ratio = 0.0;    // probes / (|V| * |N(T)|)
    double worst_build_layering_ratio = 0.0;  // probes / |V|^2

    void record_layer_single(std::uint64_t probes, std::uint64_t bound);
    void record_build_layering(std::uint64_t probes, std::uint64_t bound);
    bool clean() const { return layer_single_violations == 0 && build_layering_violations == 0; }
};

/// Membership oracle over an instance. Every call to `is_connected` is one counted probe.
/// Not thread-safe; give each concurrent task its own Oracle over the shared instance.
class Oracle {
public:
    explicit Oracle(const KSetInstance& inst, ProbeLedger* ledger = nullptr) : inst_(&inst), ledger_(ledger) {}

    /// `s` is any k distinct vertices (order irrelevant). Unlisted subsets of partial instances
    /// raise ContractError.
    bool is_connected(std::span<const Vertex> s);

    std::uint64_t probes() const { return probes_; }
    const KSetInstance& instance() const { return *inst_; }
    int n() const { return inst_->n(); }
    int k() const { return inst_->k(); }
    ProbeLedger* ledger() const { return ledger_; }

private:
    const KSetInstance* inst_;
    ProbeLedger* ledger_;
    std::uint64_t probes_ = 0;
    VertexSet scratch_;
};

/// The complete instance S_k(g).
KSetInstance connected_ksets(const Graph& g, int k);

/// Every listed (or, for complete instances, every) k-subset has the connectivity the instance says.
bool is_consistent(const Graph& g, const KSetInstance& inst);

/// N_G(t) for every G consistent with a complete instance: v outside t is a neighbor iff some
/// swap t - u + v is connected. `t` must be a connected k-set.
VertexSet neighborhood_of_set(Oracle& oracle, std::span<const Vertex> t);
VertexSet neighborhood_of_set(const KSetInstance& inst, std::span<const Vertex> t);

}  // namespace krecon
