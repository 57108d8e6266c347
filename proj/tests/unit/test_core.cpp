#include <doctest.h>

#include <random>

#include "krecon/errors.hpp"
#include "krecon/io.hpp"
#include "krecon/kset.hpp"
#include "support.hpp"

using namespace krecon;
using testing::make_graph;

namespace {

std::vector<VertexSet> sets(std::initializer_list<VertexSet> s) { return s; }

Graph p0213() {
    const std::vector<Vertex> order{0, 2, 1, 3};
    return graphs::path(order, 4);
}

}  // namespace

TEST_CASE("connected_ksets on small graphs") {
    CHECK(connected_ksets(graphs::path(4), 3).connected_sets() == sets({{0, 1, 2}, {1, 2, 3}}));
    CHECK(connected_ksets(graphs::complete(4), 4).connected_sets() == sets({{0, 1, 2, 3}}));
    CHECK(connected_ksets(graphs::cycle(5), 3).connected_sets() ==
          sets({{0, 1, 2}, {0, 1, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}}));
    CHECK_THROWS_AS(connected_ksets(graphs::path(4), 5), InvalidParameter);
    CHECK_THROWS_AS(connected_ksets(graphs::path(4), 1), InvalidParameter);
}

TEST_CASE("is_connected_subset over known edges only") {
    const Graph p4 = graphs::path(4);
    const VertexSet a{0, 1, 2}, b{0, 2, 3};
    CHECK(is_connected_subset(p4, a));
    CHECK_FALSE(is_connected_subset(p4, b));
    PartialGraph h(3, PairState::NonEdge);
    h.set(0, 1, PairState::Edge);
    h.set(1, 2, PairState::Unknown);
    CHECK_FALSE(is_connected_subset(h, a));
    CHECK_THROWS_AS(is_connected_subset(p4, VertexSet{}), InvalidParameter);
    CHECK_THROWS_AS(is_connected_subset(p4, VertexSet{0, 4}), InvalidParameter);
}

TEST_CASE("is_consistent") {
    const KSetInstance p4 = connected_ksets(graphs::path(4), 3);
    CHECK(is_consistent(graphs::path(4), p4));
    CHECK(is_consistent(p0213(), p4));
    CHECK_FALSE(is_consistent(graphs::cycle(4), p4));
    CHECK_THROWS_AS(is_consistent(graphs::path(5), p4), InvalidParameter);
}

TEST_CASE("partial instances classify only listed sets") {
    const KSetInstance inst = KSetInstance::partial(4, 3, sets({{0, 1, 2}}), sets({{1, 2, 3}}));
    CHECK(inst.classify(VertexSet{0, 1, 2}) == Membership::Connected);
    CHECK(inst.classify(VertexSet{1, 2, 3}) == Membership::Disconnected);
    CHECK(inst.classify(VertexSet{0, 1, 3}) == Membership::Unlisted);
    CHECK_THROWS_AS(KSetInstance::partial(4, 3, sets({{0, 1, 2}}), sets({{0, 1, 2}})), InvalidParameter);
    CHECK_THROWS_AS(KSetInstance::partial(4, 3, sets({{0, 1}}), {}), InvalidParameter);
    Oracle oracle(inst);
    const VertexSet unlisted{0, 1, 3};
    CHECK_THROWS_AS(oracle.is_connected(unlisted), ContractError);
}

TEST_CASE("neighborhood_of_set") {
    const VertexSet t{0, 1, 2};
    CHECK(neighborhood_of_set(connected_ksets(graphs::path(4), 3), t) == VertexSet{3});
    CHECK(neighborhood_of_set(connected_ksets(graphs::star(3), 3), t) == VertexSet{3});
    CHECK(neighborhood_of_set(connected_ksets(graphs::cycle(5), 3), t) == VertexSet{3, 4});
    CHECK_THROWS_AS(neighborhood_of_set(connected_ksets(graphs::path(4), 3), VertexSet{0, 2, 3}), InvalidParameter);
}

TEST_CASE("every k-subset is classified exactly once and graphs are self-consistent") {
    for (int n = 3; n <= 6; ++n)
        testing::for_each_graph(n, [&](const Graph& g) {
            for (int k = 2; k <= std::min(n, 4); ++k) {
                const KSetInstance inst = connected_ksets(g, k);
                REQUIRE(inst.connected_count() + inst.disconnected_count() == inst.subset_count());
                REQUIRE(is_consistent(g, inst));
            }
        });
}

TEST_CASE("neighborhood_of_set equals the true neighborhood of every connected k-set") {
    for (int n = 4; n <= 6; ++n)
        testing::for_each_graph(n, [&](const Graph& g) {
            for (int k = 3; k <= 4; ++k) {
                const KSetInstance inst = connected_ksets(g, k);
                for (const VertexSet& t : inst.connected_sets()) {
                    VertexSet expect;
                    for (Vertex v = 0; v < n; ++v) {
                        if (contains(t, v)) continue;
                        for (Vertex x : t)
                            if (g.has_edge(x, v)) {
                                expect.push_back(v);
                                break;
                            }
                    }
                    REQUIRE(neighborhood_of_set(inst, t) == expect);
                }
            }
        });
}

TEST_CASE("partial graph pair partition survives random mutation") {
    std::mt19937_64 rng(7);
    PartialGraph h(9);
    for (int step = 0; step < 2000; ++step) {
        const Vertex u = static_cast<Vertex>(rng() % 9), v = static_cast<Vertex>(rng() % 9);
        if (u == v) {
            CHECK_THROWS_AS(h.set(u, v, PairState::Edge), InvalidParameter);
            continue;
        }
        h.set(u, v, static_cast<PairState>(rng() % 3));
        h.audit();
        REQUIRE(h.count(PairState::Edge) + h.count(PairState::NonEdge) + h.count(PairState::Unknown) == 36);
    }
    const Graph g = graphs::cycle(5);
    const PartialGraph full = PartialGraph::from_graph(g);
    CHECK(full.count(PairState::Unknown) == 0);
    CHECK(full.to_graph() == g);
}

TEST_CASE("graph file format") {
    const Graph k2 = parse_graph("graph v1\nn 2\ne 0 1\n");
    CHECK(k2 == graphs::complete(2));
    CHECK(serialize_graph(k2) == "graph v1\nn 2\ne 0 1\n");
    const std::string messy = "# leading comment\ngraph v1\nn 4\nlabel 2 hub\ne 3 2   # reversed\ne 0 1\ne 2 1\n";
    const Graph g = parse_graph(messy);
    CHECK(g == graphs::path(4));
    CHECK(g.labels().at(2) == "hub");
    const std::string canon = serialize_graph(g);
    CHECK(canon == "graph v1\nn 4\nlabel 2 hub\ne 0 1\ne 1 2\ne 2 3\n");
    CHECK(serialize_graph(parse_graph(canon)) == canon);

    CHECK_THROWS_AS(parse_graph("graph v1\nn 3\ne 0 1\ne 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph v1\nn 3\ne 0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph v1\nn 3\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph v2\nn 3\n"), ParseError);
    try {
        parse_graph("graph v1\nn 3\ne 0 1\ne 0 7\n");
        FAIL("accepted out-of-range id");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("instance file format") {
    const KSetInstance inst = parse_instance("kset v1\nn 4\nk 3\nmode complete\nC 0 1 2\nC 1 2 3\n");
    CHECK(inst == connected_ksets(graphs::path(4), 3));
    CHECK(serialize_instance(inst) == "kset v1\nn 4\nk 3\nmode complete\nC 0 1 2\nC 1 2 3\n");
    const KSetInstance part = parse_instance("kset v1\nn 4\nk 3\nmode partial\nD 3 2 1\nC 2 0 1\n");
    CHECK(serialize_instance(part) == "kset v1\nn 4\nk 3\nmode partial\nC 0 1 2\nD 1 2 3\n");
    CHECK(parse_instance(serialize_instance(part)) == part);

    CHECK_THROWS_AS(parse_instance("kset v1\nn 4\nk 3\nmode complete\nD 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("kset v1\nn 4\nk 3\nmode complete\nC 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("kset v1\nn 4\nk 3\nmode complete\nC 0 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("kset v1\nn 4\nk 3\nmode partial\nC 0 1 2\nD 2 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("kset v1\nn 4\nk 3\nmode sideways\n"), ParseError);
}

TEST_CASE("graph streams") {
    std::vector<Graph> gs{graphs::path(3), graphs::complete(3)};
    const std::string text = serialize_graph_stream(gs);
    CHECK(text == "graph v1\nn 3\ne 0 1\ne 1 2\n---\ngraph v1\nn 3\ne 0 1\ne 0 2\ne 1 2\n");
    CHECK(parse_graph_stream(text) == gs);
    CHECK(parse_graph_stream("").empty());
}
