#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krecon/graph.hpp"
#include "krecon/kset.hpp"
#include "krecon/partial_graph.hpp"

namespace krecon {

/// Literal +i / -i for variable i (1-based).
using Literal = int;

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;

    /// Every clause has three literals over three distinct variables in 1..num_vars.
    /// Throws InvalidParameter.
    void validate() const;
    bool satisfied_by(std::uint64_t assignment) const;  // bit i-1 = value of variable i
    /// Exhaustive search over 2^num_vars assignments (num_vars <= 30).
    std::optional<std::uint64_t> brute_force_sat() const;
};

/// DIMACS CNF with 'c' comments and a `p cnf <vars> <clauses>` header. Clauses must have three
/// literals over distinct variables. Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& phi);

struct GadgetInstance {
    KSetInstance inst;  // partial
    PartialGraph h;     // auxiliary partial graph; unknown pairs are v x_i and v y_i
    std::vector<std::pair<std::string, Vertex>> roles;  // in id order

    Vertex role(const std::string& name) const;
};

/// Vertices: v, v^1..v^{k-1}; blocks u_i, u_i^1..u_i^{k-1} for i in [k-3]; blocks w_i likewise;
/// then per variable x_i, x_i^1..x_i^{k-1}, y_i, y_i^1..y_i^{k-1}.
/// |V| = 2nk + k + 2(k-3)k. Throws UnsupportedInstance for k < 4.
GadgetInstance reduce_3sat(const CnfFormula& phi, int k);

/// `role <name> <id>` per line.
std::string serialize_roles(const GadgetInstance& gadget);

/// All u_i v present, no w_i v, no x_i u_j or y_i u_j, at most one of x_i v, y_i v.
bool gadget_claims_hold(const GadgetInstance& gadget, const Graph& g, int num_vars, int k);

/// Truth assignment read off a witness: x_i true iff x_i v is an edge.
std::uint64_t assignment_from_witness(const GadgetInstance& gadget, const Graph& g, int num_vars);

struct SolveResult {
    enum class Status { Found, Unsatisfiable, BudgetExceeded } status = Status::Unsatisfiable;
    std::optional<Graph> graph;
    std::uint64_t nodes = 0;  // decisions taken
};

/// Decides whether some graph satisfies every listed set of an instance (complete instances
/// are treated as listing every k-set). Pairs outside every listed set are returned as non-edges.
SolveResult solve_partial(const KSetInstance& inst, std::uint64_t budget = 10'000'000);

}  // namespace krecon
