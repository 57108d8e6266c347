#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krecon/bounded_degree.hpp"
#include "krecon/errors.hpp"
#include "krecon/hardness.hpp"
#include "krecon/io.hpp"
#include "krecon/reference.hpp"
#include "krecon/triangle_free.hpp"
#include "krecon/uniqueness.hpp"

namespace py = pybind11;
using namespace krecon;

namespace {

GraphClass parse_class(const std::string& cls) {
    if (cls == "tf") return GraphClass::triangle_free();
    if (cls.rfind("bd:", 0) == 0) return GraphClass::bounded_degree(std::stoi(cls.substr(3)));
    throw InvalidParameter("class must be 'tf' or 'bd:<d>'");
}

}  // namespace

PYBIND11_MODULE(_krecon, m) {
    m.doc() = "Graph reconstruction from connected k-sets";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", error);
    py::register_exception<ContractError>(m, "ContractError", error);
    py::register_exception<UnsupportedInstance>(m, "UnsupportedInstance", error);
    py::register_exception<NoConnectedCompletion>(m, "NoConnectedCompletion", error);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>())
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("edges", &Graph::edges)
        .def("max_degree", &Graph::max_degree)
        .def("is_connected", &Graph::is_connected)
        .def("is_triangle_free", &Graph::is_triangle_free)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__hash__", [](const Graph& g) { return py::hash(py::bytes(g.key())); })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<KSetInstance>(m, "KSetInstance")
        .def_property_readonly("n", &KSetInstance::n)
        .def_property_readonly("k", &KSetInstance::k)
        .def_property_readonly("is_complete", &KSetInstance::is_complete)
        .def("connected_sets", &KSetInstance::connected_sets)
        .def("disconnected_sets", &KSetInstance::disconnected_sets);

    m.def("connected_ksets", &connected_ksets, py::arg("graph"), py::arg("k"));
    m.def("is_consistent", &is_consistent, py::arg("graph"), py::arg("instance"));
    m.def("parse_graph", [](const std::string& s) { return parse_graph(s); });
    m.def("serialize_graph", &serialize_graph);
    m.def("parse_instance", [](const std::string& s) { return parse_instance(s); });
    m.def("serialize_instance", &serialize_instance);

    m.def("tf_enumerate", [](const KSetInstance& inst) { return tf_enumerate(inst); }, py::arg("instance"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "bd_enumerate",
        [](const KSetInstance& inst, int d, std::optional<std::size_t> limit) { return bd_enumerate(inst, d, limit); },
        py::arg("instance"), py::arg("max_degree"), py::arg("limit") = py::none(),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "brute_force_consistent",
        [](const KSetInstance& inst, bool connected, bool triangle_free, std::optional<int> max_degree) {
            return brute_force_consistent(inst, {connected, triangle_free, max_degree});
        },
        py::arg("instance"), py::arg("connected") = false, py::arg("triangle_free") = false,
        py::arg("max_degree") = py::none());
    m.def("random_triangle_free_connected", &random_triangle_free_connected, py::arg("n"), py::arg("seed"));

    m.def(
        "certify_unique",
        [](const Graph& g, int k, const std::string& cls) {
            const UniquenessResult r = certify_unique(g, k, parse_class(cls));
            return py::make_tuple(r.unique, r.others);
        },
        py::arg("graph"), py::arg("k"), py::arg("graph_class") = "tf");
    m.def(
        "analyze_pairs",
        [](const Graph& g, int k) {
            std::vector<std::string> lines;
            for (const FakePairReport& r : analyze_pairs(g, k)) lines.push_back(format_report(r));
            return lines;
        },
        py::arg("graph"), py::arg("k"));

    py::class_<GadgetInstance>(m, "GadgetInstance")
        .def_readonly("instance", &GadgetInstance::inst)
        .def_readonly("roles", &GadgetInstance::roles)
        .def("role", &GadgetInstance::role);
    m.def(
        "reduce_3sat", [](const std::string& dimacs, int k) { return reduce_3sat(parse_dimacs(dimacs), k); },
        py::arg("dimacs"), py::arg("k"));
    m.def(
        "solve_partial",
        [](const KSetInstance& inst, std::uint64_t budget) -> py::object {
            SolveResult r;
            {
                py::gil_scoped_release release;
                r = solve_partial(inst, budget);
            }
            switch (r.status) {
                case SolveResult::Status::Found: return py::cast(*r.graph);
                case SolveResult::Status::Unsatisfiable: return py::none();
                case SolveResult::Status::BudgetExceeded: break;
            }
            throw UnsupportedInstance("solver budget exceeded");
        },
        py::arg("instance"), py::arg("budget") = 10'000'000);
}
