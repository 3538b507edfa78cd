#include "doctest.h"
#include "tpw/errors.hpp"
#include "tpw/exact.hpp"
#include "tpw/gadgets.hpp"
#include "tpw/separator.hpp"
#include "tpw/treewidth.hpp"
#include "oracles.hpp"

using namespace tpw;

namespace {
constexpr int kInf = 1 << 20;
}

TEST_CASE("mu examples") {
    CHECK(mu(gen_path(3), 0, 2, kInf) == 1);
    CHECK(mu(gen_complete(4), 0, 1, kInf) == 2);
    const Graph c4 = gen_cycle(4);
    CHECK(mu(c4, 0, 2, kInf) == 2);
    CHECK(mu(c4, 0, 1, kInf) == 1);
    CHECK(mu(Graph::from_edges(4, {{0, 1}, {2, 3}}), 0, 3, kInf) == 0);
    CHECK_THROWS_AS(mu(c4, 1, 1, kInf), ContractViolation);
}

TEST_CASE("mu stops at the cap") {
    CHECK(mu(gen_complete(7), 0, 1, 3) == 3);
    CHECK(mu(gen_complete(7), 0, 1, kInf) == 5);
}

TEST_CASE("one engine answers many queries") {
    Rng rng(8);
    const Graph g = oracle::random_graph(12, 0.4, rng);
    SeparatorEngine engine(g);
    for (Vertex s = 0; s < 12; ++s) {
        for (Vertex t = 0; t < 12; ++t) {
            if (s != t) CHECK(engine.mu(s, t, kInf) == brute_mu(g, s, t));
        }
    }
}

TEST_CASE("mu matches subset enumeration and path packing") {
    Rng rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform(2, 8);
        const Graph g = oracle::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = s + 1; t < n; ++t) {
                const int m = mu(g, s, t, kInf);
                CHECK(m == brute_mu(g, s, t));
                CHECK(m == oracle::menger_paths(g, s, t));
                CHECK(mu(g, t, s, kInf) == m);
            }
        }
    }
}

TEST_CASE("candidate pairs") {
    CHECK(candidate_pairs({{{0, 1, 2}}, {}}) == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(candidate_pairs({{{0, 1}, {1, 2}}, {{0, 1}}}) == std::vector<VertexPair>{{0, 1}, {1, 2}});
    CHECK(candidate_pairs({{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}}) == std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(all_pairs(3) == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("G^b examples") {
    CHECK(build_gb(gen_cycle(4), 2, all_pairs(4)) == Graph::from_edges(4, {{0, 2}, {1, 3}}));
    CHECK(build_gb(gen_complete(5), 3, all_pairs(5)) == gen_complete(5));
    CHECK(build_gb(gen_complete(5), 4, all_pairs(5)).num_edges() == 0);
}

TEST_CASE("G^b does not depend on threads or pair order") {
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(2, 25), 0.3, rng);
        auto pairs = all_pairs(g.num_vertices());
        const Graph base = build_gb(g, 3, pairs, 1);
        rng.shuffle(pairs);
        CHECK(build_gb(g, 3, pairs, 4) == base);
    }
}

TEST_CASE("candidate pairs hold every G^b edge when b exceeds the width") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(2, 14), 0.35, rng);
        const TreeDecomposition td = heuristic_td(g, EliminationStrategy::MinFill);
        const int b = td.width() + 1;
        CHECK(build_gb(g, b, candidate_pairs(td)) == build_gb(g, b, all_pairs(g.num_vertices())));
    }
}

TEST_CASE("b-reduction") {
    const Graph c4 = gen_cycle(4);
    const BReduction id = b_reduction(c4, Graph(4));
    CHECK(id.h == c4);
    CHECK(id.weight == std::vector<int>{1, 1, 1, 1});

    const BReduction diag = b_reduction(c4, Graph::from_edges(4, {{0, 2}, {1, 3}}));
    CHECK(diag.h == Graph::from_edges(2, {{0, 1}}));
    CHECK(diag.weight == std::vector<int>{2, 2});
    CHECK(diag.parts == std::vector<VertexSet>{{0, 2}, {1, 3}});

    const BReduction all = b_reduction(c4, gen_path(4));
    CHECK(all.h.num_vertices() == 1);
    CHECK(all.weight == std::vector<int>{4});
}

TEST_CASE("transported decompositions are decompositions of H") {
    Rng rng(12);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(2, 20), 0.1 + 0.4 * rng.unit(), rng);
        const TreeDecomposition td = heuristic_td(g, EliminationStrategy::MinFill, trial);
        const int b = td.width() + 1 + rng.uniform(0, 1);
        const BReduction red = b_reduction(g, build_gb(g, b, candidate_pairs(td)));
        int total = 0;
        for (int w : red.weight) total += w;
        CHECK(total == g.num_vertices());
        CHECK(verify_td(red.h, transport_td(td, red)).ok());
    }
}
