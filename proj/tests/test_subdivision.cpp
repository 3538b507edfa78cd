#include "doctest.h"
#include "tpw/errors.hpp"
#include "tpw/exact.hpp"
#include "tpw/gadgets.hpp"
#include "tpw/subdivision.hpp"
#include "oracles.hpp"

using namespace tpw;

TEST_CASE("tree-cut bridge on K_2 with two nodes") {
    const Graph k2 = gen_path(2);
    const SubdividedPartition out = tcd_to_subdivision_tp(k2, {{{0}, {1}}, {{0, 1}}, 0});
    CHECK(out.graph.num_vertices() == 3);
    CHECK(out.paths.at(Edge(0, 1)).size() == 1);
    const VerifyResult v = verify_tp(out.graph, out.tp);
    CHECK(v.ok());
    CHECK(v.width == 2);
    CHECK(v.width <= tcd_bridge_bound(1));
}

TEST_CASE("one-bag tree-cut decomposition needs no subdivision") {
    const Graph g = gen_grid(3);
    VertexSet all(9);
    std::iota(all.begin(), all.end(), 0);
    const SubdividedPartition out = tcd_to_subdivision_tp(g, {{all}, {}, 0});
    CHECK(out.graph == g);
    CHECK(out.tp.num_nodes() == 1);
}

TEST_CASE("tree-cut bridge on a path of singleton bags") {
    const Graph p3 = gen_path(3);
    const TreeCutDecomposition tcd{{{0}, {1}, {2}}, {{0, 1}, {1, 2}}, 0};
    const SubdividedPartition out = tcd_to_subdivision_tp(p3, tcd);
    const VerifyResult v = verify_tp(out.graph, out.tp);
    CHECK(v.ok());
    CHECK(v.width == 2);
    CHECK(v.width <= tcd_bridge_bound(verify_tcd(p3, tcd).width));
}

TEST_CASE("tree-cut bridge places long edges along the tree path") {
    // Root {0}, chain {1} - {2}; edge 0-2 crosses two tree edges.
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    const TreeCutDecomposition tcd{{{0}, {1}, {2}}, {{0, 1}, {1, 2}}, 0};
    const SubdividedPartition out = tcd_to_subdivision_tp(g, tcd);
    CHECK(out.paths.at(Edge(0, 2)).size() == 2);
    const VerifyResult v = verify_tp(out.graph, out.tp);
    CHECK(v.ok());
    CHECK(v.width <= tcd_bridge_bound(verify_tcd(g, tcd).width));
}

TEST_CASE("non-nice tree-cut decompositions are refused with the thin node") {
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const TreeCutDecomposition tcd{{{0}, {1}, {2}}, {{0, 1}, {0, 2}}, 0};
    CHECK_THROWS_WITH_AS(tcd_to_subdivision_tp(g, tcd), doctest::Contains("thin node 1"), ContractViolation);
}

TEST_CASE("lifting a K_2 partition through three subdivisions") {
    const Graph k2 = gen_path(2);
    const SubdividedPartition out = tp_lift_subdivision(k2, {{{0}, {1}}, {{0, 1}}}, {{Edge(0, 1), 3}});
    CHECK(out.graph.num_vertices() == 5);
    const VerifyResult v = verify_tp(out.graph, out.tp);
    CHECK(v.ok());
    CHECK(v.width <= 2);
    // The path vertex next to the parent-side endpoint joins the child bag.
    const auto bag_of = out.tp.bag_of(5);
    CHECK(bag_of[out.paths.at(Edge(0, 1)).front()] == bag_of[1]);
}

TEST_CASE("zero counts leave the partition unchanged") {
    const Graph c4 = gen_cycle(4);
    const TreePartition tp{{{0, 3}, {1, 2}}, {{0, 1}}};
    const SubdividedPartition out = tp_lift_subdivision(c4, tp, {});
    CHECK(out.tp.bags == tp.bags);
    CHECK(out.graph == c4);
}

TEST_CASE("lifting the four-cycle partition with unit counts") {
    const Graph c4 = gen_cycle(4);
    std::map<Edge, int> ones;
    for (const Edge& e : c4.edges()) ones[e] = 1;
    const SubdividedPartition out = tp_lift_subdivision(c4, {{{0, 3}, {1, 2}}, {{0, 1}}}, ones);
    const VerifyResult v = verify_tp(out.graph, out.tp);
    CHECK(v.ok());
    CHECK(v.width == 4);
    CHECK(v.width <= 6);
}

TEST_CASE("random lifts stay within k(k+1)") {
    Rng rng(70);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 9), 0.2 + 0.5 * rng.unit(), rng);
        const ExactTpwResult best = exact_tpw(g, 9);
        const int k = *best.width;
        std::map<Edge, int> counts;
        for (const Edge& e : g.edges()) counts[e] = rng.uniform(0, 5);
        const SubdividedPartition out = tp_lift_subdivision(g, best.witness, counts);
        const VerifyResult v = verify_tp(out.graph, out.tp);
        CHECK(v.ok());
        CHECK(v.width <= std::max(1, k * (k + 1)));
        // Dropping the new vertices gives back the original bags on the original tree.
        for (int i = 0; i < best.witness.num_nodes(); ++i) {
            VertexSet original;
            for (Vertex x : out.tp.bags[i]) {
                if (x < g.num_vertices()) original.push_back(x);
            }
            CHECK(original == best.witness.bags[i]);
        }
        CHECK(std::equal(best.witness.tree_edges.begin(), best.witness.tree_edges.end(), out.tp.tree_edges.begin()));
    }
}

TEST_CASE("invalid partitions are refused") {
    CHECK_THROWS_AS(tp_lift_subdivision(gen_cycle(4), {{{0}, {1}, {2}, {3}}, {{0, 1}, {1, 2}, {2, 3}}}, {}), ContractViolation);
}
