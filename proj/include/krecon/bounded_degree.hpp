#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krecon/graph.hpp"
#include "krecon/kset.hpp"
#include "krecon/partial_graph.hpp"

namespace krecon {

/// One allowed graph on a cell, as its edge list in global ids (sorted).
using CellGraph = std::vector<Edge>;

/// Partial graph whose unknown pairs are exactly the pairs inside the disjoint cells, plus one
/// collection of allowed cell graphs per cell. A completion picks one member per cell.
struct Skeleton {
    PartialGraph h;
    std::vector<VertexSet> cells;
    std::vector<std::vector<CellGraph>> collections;

    int width() const;
    /// Product of the collection sizes (saturating).
    std::uint64_t completion_count() const;
    /// Cells disjoint and in range, unknown pairs of h exactly the within-cell pairs, every
    /// collection member inside its cell, width <= max_width. Throws ContractError.
    void validate(int max_width) const;
};

/// Step-4 admission rule for cell graphs.
///  - Literal: every k-set meeting the cell is checked, with unknown pairs outside the cell
///    assumed absent (connected sets) or present (disconnected sets).
///  - Localized: a k-set is checked only in the cell holding its important pairs.
enum class CellRule { Literal, Localized };

struct BdOptions {
    CellRule rule = CellRule::Literal;
    ProbeLedger* ledger = nullptr;  // receives the layering probe counts when set
};

struct BdStats {
    std::uint64_t local_graphs = 0;  // step-1 graphs on N[t]
    std::uint64_t discarded = 0;     // step-1 graphs rejected in steps 2-4
    std::uint64_t skeletons = 0;
    std::uint64_t probes = 0;
};

/// Whether the unknown pair uv can change the connectivity of some supergraph of h[s]: true
/// iff no known-edge path joins u and v inside s and s is connected once every non-non-edge
/// pair is added. Throws ContractError if uv is known or u, v are not in s.
bool edge_importance(std::span<const Vertex> s, const PartialGraph& h, Vertex u, Vertex v);

/// Skeletons of width <= d whose completions are exactly the connected graphs with max degree
/// <= d consistent with the complete instance. Skeletons with an empty collection are omitted.
/// Throws InvalidParameter for d < 1, ContractError for partial instances.
std::vector<Skeleton> bd_skeletons(const KSetInstance& inst, int d, BdStats* stats = nullptr,
                                   const BdOptions& options = {});

/// Streams the completions of one skeleton in odometer order (last cell fastest).
class CompletionCursor {
public:
    explicit CompletionCursor(const Skeleton& sk);
    std::optional<Graph> next();

private:
    const Skeleton* sk_;
    std::vector<std::size_t> digits_;
    bool done_;
};

std::vector<Graph> completions(const Skeleton& sk);

/// Union of completions over bd_skeletons, deduplicated, filtered to connected, max degree <= d
/// and consistent, sorted. Stops after `limit` graphs when given.
std::vector<Graph> bd_enumerate(const KSetInstance& inst, int d, std::optional<std::size_t> limit = std::nullopt,
                                BdStats* stats = nullptr, const BdOptions& options = {});

/// JSON document {"skeletons": [{"H": {...}, "CELLS": [...], "COLLECTIONS": [...]}, ...]}.
std::string serialize_skeletons(const std::vector<Skeleton>& family);

}  // namespace krecon
