#include "doctest.h"
#include "tpw/decomposition.hpp"
#include "tpw/errors.hpp"
#include "tpw/gadgets.hpp"
#include "tpw/treewidth.hpp"
#include "oracles.hpp"

using namespace tpw;

TEST_CASE("verify_td") {
    const Graph k2 = gen_path(2);
    CHECK(verify_td(k2, {{{0, 1}}, {}}).width == 1);

    const Graph p3 = gen_path(3);
    const VerifyResult path = verify_td(p3, {{{0, 1}, {1, 2}}, {{0, 1}}});
    CHECK(path.ok());
    CHECK(path.width == 1);

    const VerifyResult c3 = verify_td(gen_cycle(3), {{{0, 1}, {1, 2}}, {{0, 1}}});
    REQUIRE_FALSE(c3.ok());
    CHECK(c3.violation->clause == Clause::EdgeCoverage);
    CHECK(c3.violation->edge == Edge(0, 2));
}

TEST_CASE("verify_td connectivity and tree clauses") {
    const Graph p3 = gen_path(3);
    const VerifyResult split = verify_td(p3, {{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}});
    REQUIRE_FALSE(split.ok());
    CHECK(split.violation->clause == Clause::Connectivity);
    CHECK(split.violation->vertex == 1);

    const VerifyResult cyc = verify_td(p3, {{{0, 1}, {1, 2}}, {{0, 1}, {1, 0}}});
    REQUIRE_FALSE(cyc.ok());
    CHECK(cyc.violation->clause == Clause::Tree);

    CHECK_THROWS_AS(verify_td(p3, {{{0, 7}}, {}}), StructuralError);
}

TEST_CASE("verify_tp") {
    const TreePartition p4{{{0}, {1}, {2}, {3}}, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(verify_tp(gen_path(4), p4).width == 1);

    const Graph c4 = gen_cycle(4);  // v1..v4 = 0..3
    const TreePartition two{{{0, 3}, {1, 2}}, {{0, 1}}};
    const VerifyResult ok = verify_tp(c4, two);
    CHECK(ok.ok());
    CHECK(ok.width == 2);

    const VerifyResult bad = verify_tp(c4, p4);
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.violation->clause == Clause::EdgeLocality);
    CHECK(bad.violation->edge == Edge(0, 3));

    const VerifyResult twice = verify_tp(gen_path(2), {{{0, 1}, {1}}, {{0, 1}}});
    REQUIRE_FALSE(twice.ok());
    CHECK(twice.violation->clause == Clause::Partition);

    const VerifyResult missing = verify_tp(gen_path(2), {{{0}}, {}});
    REQUIRE_FALSE(missing.ok());
    CHECK(missing.violation->clause == Clause::VertexCoverage);
    CHECK(missing.violation->vertex == 1);

    const VerifyResult empty = verify_tp(gen_path(2), {{{0, 1}, {}}, {{0, 1}}});
    REQUIRE_FALSE(empty.ok());
    CHECK(empty.violation->clause == Clause::EmptyBag);
}

TEST_CASE("verify_tp agrees with the definition under random bag moves") {
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(2, 7), 0.4, rng);
        const int n = g.num_vertices();
        // Random partition and random tree over its parts.
        std::vector<int> part(static_cast<std::size_t>(n));
        const int parts = rng.uniform(1, n);
        for (int v = 0; v < n; ++v) part[v] = v < parts ? v : rng.uniform(0, parts - 1);
        TreePartition tp;
        tp.bags.resize(static_cast<std::size_t>(parts));
        for (int v = 0; v < n; ++v) tp.bags[part[v]].push_back(v);
        for (int p = 1; p < parts; ++p) tp.tree_edges.emplace_back(rng.uniform(0, p - 1), p);
        bool expected = true;
        for (const Edge& e : g.edges()) {
            const int a = part[e.u];
            const int b = part[e.v];
            if (a == b) continue;
            bool adjacent = false;
            for (auto [x, y] : tp.tree_edges) adjacent = adjacent || (x == a && y == b) || (x == b && y == a);
            expected = expected && adjacent;
        }
        CHECK(verify_tp(g, tp).ok() == expected);
    }
}

TEST_CASE("verify_domino") {
    CHECK(verify_domino(gen_path(3), {{{0, 1}, {1, 2}}, {{0, 1}}}).width == 1);
    CHECK(verify_domino(gen_path(5), {{{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}, {2, 3}}}).ok());
    const VerifyResult star = verify_domino(gen_star(3), {{{0, 1}, {0, 2}, {0, 3}}, {{0, 1}, {1, 2}}});
    REQUIRE_FALSE(star.ok());
    CHECK(star.violation->clause == Clause::Domino);
    CHECK(star.violation->vertex == 0);
}

TEST_CASE("verify_tcd") {
    const Graph k2 = gen_path(2);
    const TcdReport one = verify_tcd(k2, {{{0, 1}}, {}, 0});
    CHECK(one.ok());
    CHECK(one.width == 2);
    CHECK(one.nice);

    const TcdReport split = verify_tcd(k2, {{{0}, {1}}, {{0, 1}}, 0});
    CHECK(split.width == 1);
    CHECK(split.adhesion[1] == 1);
    CHECK(split.torso[0] == 1);
    CHECK(split.nice);

    const TcdReport star = verify_tcd(gen_path(3), {{{1}, {0}, {2}}, {{0, 1}, {0, 2}}, 0});
    CHECK(star.width == 1);
    CHECK(star.adhesion[1] == 1);
    CHECK(star.adhesion[2] == 1);
    CHECK(star.torso[0] == 1);
    CHECK(star.nice);
}

TEST_CASE("verify_tcd detects thin nodes seeing a sibling subtree") {
    // Root {0} with children {1} and {2}; edge 1-2 joins the sibling subtrees.
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const TcdReport r = verify_tcd(g, {{{0}, {1}, {2}}, {{0, 1}, {0, 2}}, 0});
    CHECK(r.ok());
    CHECK_FALSE(r.nice);
    CHECK(r.offending_node == 1);
    CHECK(r.cut_size[2] == 1);
}

TEST_CASE("verify_tcd near-partition clause") {
    const TcdReport r = verify_tcd(gen_path(2), {{{0, 1}, {1}}, {{0, 1}}, 0});
    REQUIRE_FALSE(r.ok());
    CHECK(r.violation->clause == Clause::Partition);
}

TEST_CASE("empty bags are pruned without breaking validity") {
    const Graph p3 = gen_path(3);
    const TreePartition tp{{{0}, {}, {1}, {2}}, {{0, 1}, {1, 2}, {2, 3}}};
    const TreePartition pruned = prune_empty_bags(tp);
    CHECK(pruned.num_nodes() == 3);
    CHECK(verify_tp(p3, pruned).ok());

    const TreeDecomposition td{{{0, 1}, {}, {1, 2}}, {{0, 1}, {1, 2}}};
    CHECK(verify_td(p3, prune_empty_bags(td)).ok());
}

TEST_CASE("restriction keeps validity and relabels by rank") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(2, 12), 0.3, rng);
        const TreeDecomposition td = heuristic_td(g, EliminationStrategy::MinDegree, rng.next());
        VertexSet keep;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (rng.bernoulli(0.5)) keep.push_back(v);
        }
        if (keep.empty()) continue;
        const InducedSubgraph sub = induced_subgraph(g, keep);
        CHECK(verify_td(sub.graph, restrict_td(td, keep)).ok());
    }
}

TEST_CASE("partition_to_td") {
    const TreePartition tp{{{0, 3}, {1, 2}}, {{0, 1}}};
    const TreeDecomposition td = partition_to_td(tp);
    CHECK(verify_td(gen_cycle(4), td).ok());
    CHECK(td.width() <= 2 * tp.width() - 1);
}
