#include <doctest.h>

#include "krecon/errors.hpp"
#include "krecon/reference.hpp"
#include "krecon/triangle_free.hpp"
#include "support.hpp"

using namespace krecon;

namespace {

Graph path_of(std::initializer_list<Vertex> order) {
    const std::vector<Vertex> o(order);
    return graphs::path(o, static_cast<int>(o.size()));
}

}  // namespace

TEST_CASE("tf_finish completes a known core uniquely") {
    {
        const Graph p4 = graphs::path(4);
        const auto g = tf_finish(connected_ksets(p4, 3), testing::restrict_known(p4, {0, 1, 2}), VertexSet{0, 1});
        REQUIRE(g);
        CHECK(*g == p4);
    }
    {
        const Graph c6 = graphs::cycle(6);
        const auto g = tf_finish(connected_ksets(c6, 3), testing::restrict_known(c6, {0, 1, 2, 5}), VertexSet{0, 1});
        REQUIRE(g);
        CHECK(*g == c6);
    }
    {
        const Graph k3 = graphs::complete(3);
        CHECK_THROWS_AS(tf_finish(connected_ksets(k3, 3), PartialGraph(3), VertexSet{0, 1}), ContractError);
    }
}

TEST_CASE("tf_kernel on a star and a cycle") {
    {
        const Graph star = graphs::star(5);
        const auto kernel = tf_kernel(connected_ksets(star, 3), 0, VertexSet{1, 2});
        REQUIRE(kernel);
        CHECK(kernel->x == VertexSet{1, 2, 3, 4, 5});
        CHECK(kernel->y.empty());
        CHECK(kernel->h == PartialGraph::from_graph(star));
    }
    {
        const Graph c6 = graphs::cycle(6);
        const auto kernel = tf_kernel(connected_ksets(c6, 3), 0, VertexSet{1, 5});
        REQUIRE(kernel);
        CHECK(kernel->x == VertexSet{1, 5});
        CHECK(kernel->y == VertexSet{2, 4});
        CHECK(kernel->h.admits(c6));
        for (Vertex a : {0, 1, 2, 4, 5})
            for (Vertex b = 0; b < 6; ++b)
                if (a != b) CHECK(kernel->h.is_known(a, b));
    }
}

TEST_CASE("tf_kernel argument checks") {
    const KSetInstance inst = connected_ksets(graphs::cycle(6), 3);
    CHECK_THROWS_AS(tf_kernel(inst, 0, VertexSet{1}), InvalidParameter);
    CHECK_THROWS_AS(tf_kernel(inst, 0, VertexSet{1, 1}), InvalidParameter);
    CHECK_THROWS_AS(tf_kernel(inst, 0, VertexSet{0, 1}), InvalidParameter);
    CHECK_THROWS_AS(tf_kernel(inst, 0, VertexSet{1, 9}), InvalidParameter);
    CHECK_THROWS_AS(tf_kernel(connected_ksets(graphs::path(3), 2), 0, VertexSet{}), InvalidParameter);
}

TEST_CASE("tf_large_degree") {
    const auto star = tf_large_degree(connected_ksets(graphs::star(3), 3), 0, VertexSet{1, 2});
    REQUIRE(star);
    CHECK(*star == graphs::star(3));

    const Graph c6 = graphs::cycle(6);
    const auto cyc = tf_large_degree(connected_ksets(c6, 3), 0, VertexSet{1, 5});
    REQUIRE(cyc);
    CHECK(*cyc == c6);
    // 2 is not a neighbor of 0 in the only consistent triangle-free graph.
    CHECK_FALSE(tf_large_degree(connected_ksets(c6, 3), 0, VertexSet{1, 2}).has_value());

    const auto p = tf_large_degree(connected_ksets(graphs::path(4), 3), 1, VertexSet{0, 2});
    REQUIRE(p);
    CHECK(*p == graphs::path(4));
}

TEST_CASE("tf_enumerate examples") {
    const auto p4 = tf_enumerate(connected_ksets(graphs::path(4), 3));
    CHECK(p4 == std::vector<Graph>{graphs::path(4), path_of({0, 2, 1, 3})});
    for (int r = 3; r <= 8; ++r) CHECK(tf_enumerate(connected_ksets(graphs::star(r), 3)) == std::vector<Graph>{graphs::star(r)});
    CHECK(tf_enumerate(connected_ksets(graphs::cycle(5), 3)) == std::vector<Graph>{graphs::cycle(5)});
}

TEST_CASE("tf_enumerate edge cases") {
    // k = 2 lists the edges
    CHECK(tf_enumerate(connected_ksets(graphs::cycle(6), 2)) == std::vector<Graph>{graphs::cycle(6)});
    CHECK(tf_enumerate(connected_ksets(graphs::cycle(3), 2)).empty());
    const std::vector<VertexSet> none;
    CHECK_THROWS_AS(tf_enumerate(KSetInstance::partial(4, 3, none, none)), ContractError);
    CHECK_THROWS_AS(KSetInstance::complete(2, 3, none), InvalidParameter);  // n < k has no instance
}

TEST_CASE("tf_enumerate matches brute force on every graph up to 6 vertices") {
    for (int n = 4; n <= 6; ++n)
        testing::for_each_graph(n, [&](const Graph& g) {
            if (!g.is_connected() || !g.is_triangle_free()) return;
            for (int k = 3; k <= 4 && k <= n; ++k) {
                const KSetInstance inst = connected_ksets(g, k);
                TfStats stats;
                const auto got = tf_enumerate(inst, &stats);
                const auto want = brute_force_consistent(inst, {.connected = true, .triangle_free = true});
                REQUIRE(got == want);
                for (const Graph& h : got) REQUIRE(is_consistent(h, inst));
            }
        });
}
