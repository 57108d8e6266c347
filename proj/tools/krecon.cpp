// krecon: batch front end for the reconstruction library.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "krecon/bounded_degree.hpp"
#include "krecon/errors.hpp"
#include "krecon/hardness.hpp"
#include "krecon/io.hpp"
#include "krecon/reference.hpp"
#include "krecon/triangle_free.hpp"
#include "krecon/uniqueness.hpp"

namespace {

using namespace krecon;

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Globals {
    bool quiet = false;
    std::uint64_t seed = 1;
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

void note(const Globals& g, const std::string& msg) {
    if (!g.quiet) std::cerr << msg << '\n';
}

GraphClass parse_class(const std::string& s) {
    if (s == "tf") return GraphClass::triangle_free();
    if (s.rfind("bd:", 0) == 0) {
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(s.substr(3), &used);
            if (used != s.size() - 3) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw InvalidParameter("bad class '" + s + "'");
        }
        return GraphClass::bounded_degree(d);
    }
    throw InvalidParameter("bad class '" + s + "', expected tf or bd:<D>");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconstruct graphs from the connectivity of their k-vertex subsets"};
    app.require_subcommand(1);
    Globals globals;
    app.add_flag("--quiet,-q", globals.quiet, "Suppress summary lines on stderr");
    app.add_option("--seed", globals.seed, "Seed for randomized generation")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "Graph -> complete instance");
    std::string gen_graph, gen_out, gen_graph_out;
    int gen_k = 0, gen_random = 0;
    gen->add_option("--graph", gen_graph, "Input graph file");
    gen->add_option("--random-tf", gen_random, "Use a random connected triangle-free graph on N vertices instead");
    gen->add_option("--k", gen_k, "Subset size")->required();
    gen->add_option("--out", gen_out, "Instance file (default stdout)");
    gen->add_option("--graph-out", gen_graph_out, "Also write the (random) graph here");

    // reconstruct tf|bd
    auto* rec = app.add_subcommand("reconstruct", "Enumerate consistent graphs");
    rec->require_subcommand(1);
    auto* rec_tf = rec->add_subcommand("tf", "Connected triangle-free graphs");
    std::string tf_inst, tf_out;
    rec_tf->add_option("--instance", tf_inst, "Complete instance file")->required();
    rec_tf->add_option("--out", tf_out, "Graph stream file (default stdout)");

    auto* rec_bd = rec->add_subcommand("bd", "Connected graphs of bounded maximum degree");
    std::string bd_inst, bd_out, bd_skel, bd_rule = "literal";
    int bd_d = 0;
    bool bd_enum = false;
    std::optional<std::size_t> bd_limit;
    rec_bd->add_option("--instance", bd_inst, "Complete instance file")->required();
    rec_bd->add_option("--max-degree", bd_d, "Degree bound D")->required();
    rec_bd->add_option("--skeletons", bd_skel, "Write the skeleton family as JSON");
    rec_bd->add_flag("--enumerate", bd_enum, "Stream completions (default when --skeletons is absent)");
    rec_bd->add_option("--limit", bd_limit, "Stop after N graphs");
    rec_bd->add_option("--rule", bd_rule, "Cell admission rule")->check(CLI::IsMember({"literal", "localized"}));
    rec_bd->add_option("--out", bd_out, "Graph stream file (default stdout)");

    // unique
    auto* uni = app.add_subcommand("unique", "Is the graph the only class member with its k-sets?");
    std::string uni_graph, uni_class;
    int uni_k = 0;
    uni->add_option("--graph", uni_graph, "Graph file")->required();
    uni->add_option("--k", uni_k, "Subset size")->required();
    uni->add_option("--class", uni_class, "tf or bd:<D>")->required();

    // analyze pairs
    auto* ana = app.add_subcommand("analyze", "Structural reports");
    ana->require_subcommand(1);
    auto* ana_pairs = ana->add_subcommand("pairs", "Clear / fake classification of every non-edge");
    std::string ana_graph;
    int ana_k = 0;
    ana_pairs->add_option("--graph", ana_graph, "Graph file")->required();
    ana_pairs->add_option("--k", ana_k, "Subset size")->required();

    // reduce
    auto* red = app.add_subcommand("reduce", "3-CNF -> partial instance");
    std::string red_cnf, red_out, red_roles;
    int red_k = 0;
    red->add_option("--cnf", red_cnf, "DIMACS file")->required();
    red->add_option("--k", red_k, "Subset size (>= 4)")->required();
    red->add_option("--out", red_out, "Instance file")->required();
    red->add_option("--roles", red_roles, "Role map file");

    // solve
    auto* sol = app.add_subcommand("solve", "Search for a graph satisfying a partial instance");
    std::string sol_inst, sol_out;
    std::uint64_t sol_budget = 10'000'000;
    sol->add_option("--instance", sol_inst, "Instance file")->required();
    sol->add_option("--budget", sol_budget, "Decision limit")->capture_default_str();
    sol->add_option("--out", sol_out, "Witness graph file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            if (gen_graph.empty() == (gen_random == 0)) throw InvalidParameter("give exactly one of --graph, --random-tf");
            const Graph g = gen_random ? random_triangle_free_connected(gen_random, globals.seed)
                                       : parse_graph(read_file(gen_graph));
            if (!gen_graph_out.empty()) write_file(gen_graph_out, serialize_graph(g));
            const KSetInstance inst = connected_ksets(g, gen_k);
            emit(gen_out, serialize_instance(inst));
            note(globals, std::to_string(inst.connected_count()) + " connected sets");
            return kExitFound;
        }
        if (*rec_tf) {
            const KSetInstance inst = parse_instance(read_file(tf_inst));
            const auto found = tf_enumerate(inst);
            emit(tf_out, serialize_graph_stream(found));
            note(globals, std::to_string(found.size()) + " graphs");
            return found.empty() ? kExitNone : kExitFound;
        }
        if (*rec_bd) {
            const KSetInstance inst = parse_instance(read_file(bd_inst));
            BdOptions options;
            options.rule = bd_rule == "literal" ? CellRule::Literal : CellRule::Localized;
            bool any = false;
            if (!bd_skel.empty()) {
                const auto family = bd_skeletons(inst, bd_d, nullptr, options);
                write_file(bd_skel, serialize_skeletons(family));
                note(globals, std::to_string(family.size()) + " skeletons");
                any = !family.empty();
            }
            if (bd_enum || bd_skel.empty()) {
                const auto found = bd_enumerate(inst, bd_d, bd_limit, nullptr, options);
                emit(bd_out, serialize_graph_stream(found));
                note(globals, std::to_string(found.size()) + " graphs");
                any = !found.empty();
            }
            return any ? kExitFound : kExitNone;
        }
        if (*uni) {
            const Graph g = parse_graph(read_file(uni_graph));
            const UniquenessResult r = certify_unique(g, uni_k, parse_class(uni_class));
            if (r.unique) {
                std::cout << "unique\n";
                return kExitFound;
            }
            std::cout << "not-unique (" << r.others.size() << " alternatives)\n";
            return kExitNone;
        }
        if (*ana_pairs) {
            const Graph g = parse_graph(read_file(ana_graph));
            for (const FakePairReport& r : analyze_pairs(g, ana_k)) std::cout << format_report(r) << '\n';
            return kExitFound;
        }
        if (*red) {
            const CnfFormula phi = parse_dimacs(read_file(red_cnf));
            const GadgetInstance gadget = reduce_3sat(phi, red_k);
            write_file(red_out, serialize_instance(gadget.inst));
            if (!red_roles.empty()) write_file(red_roles, serialize_roles(gadget));
            note(globals, std::to_string(gadget.inst.n()) + " vertices, " +
                              std::to_string(gadget.inst.connected_count()) + " connected and " +
                              std::to_string(gadget.inst.disconnected_count()) + " disconnected sets");
            return kExitFound;
        }
        if (*sol) {
            const KSetInstance inst = parse_instance(read_file(sol_inst));
            const SolveResult r = solve_partial(inst, sol_budget);
            note(globals, std::to_string(r.nodes) + " decisions");
            switch (r.status) {
                case SolveResult::Status::Found:
                    emit(sol_out, serialize_graph(*r.graph));
                    return kExitFound;
                case SolveResult::Status::Unsatisfiable:
                    std::cout << "none\n";
                    return kExitNone;
                case SolveResult::Status::BudgetExceeded:
                    std::cout << "budget-exceeded\n";
                    return kExitBudget;
            }
        }
    } catch (const Error& e) {
        std::cerr << "krecon: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "krecon: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
