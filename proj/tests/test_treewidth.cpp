#include <cmath>

#include "doctest.h"
#include "tpw/errors.hpp"
#include "tpw/gadgets.hpp"
#include "tpw/treewidth.hpp"
#include "oracles.hpp"

using namespace tpw;

TEST_CASE("heuristic decompositions on trees, cycles and cliques") {
    Rng rng(1);
    for (auto strategy : {EliminationStrategy::MinDegree, EliminationStrategy::MinFill}) {
        const Graph tree = gen_random_tree(40, rng);
        const TreeDecomposition t = heuristic_td(tree, strategy, 9);
        CHECK(verify_td(tree, t).ok());
        CHECK(t.width() == 1);
        CHECK(heuristic_td(gen_cycle(6), strategy).width() == 2);
        CHECK(heuristic_td(gen_complete(5), strategy).width() == 4);
    }
}

TEST_CASE("heuristic decompositions are valid and deterministic") {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 30), 0.05 + 0.4 * rng.unit(), rng);
        const std::uint64_t seed = rng.next();
        const TreeDecomposition a = heuristic_td(g, EliminationStrategy::MinFill, seed);
        CHECK(verify_td(g, a).ok());
        const TreeDecomposition b = heuristic_td(g, EliminationStrategy::MinFill, seed);
        CHECK(a.bags == b.bags);
        CHECK(a.tree_edges == b.tree_edges);
    }
}

TEST_CASE("lower bound examples") {
    Rng rng(3);
    CHECK(treewidth_lower_bound(gen_random_tree(20, rng)) == 1);
    CHECK(treewidth_lower_bound(gen_complete(6)) == 5);
    CHECK(treewidth_lower_bound(gen_cycle(4)) == 2);
}

TEST_CASE("lower bound never exceeds brute-force treewidth; exact_td matches it") {
    Rng rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 7), 0.1 + 0.6 * rng.unit(), rng);
        const int tw = oracle::brute_treewidth(g);
        CHECK(treewidth_lower_bound(g) <= tw);
        CHECK(exact_treewidth(g) == tw);
        const auto td = exact_td(g, tw);
        REQUIRE(td.has_value());
        CHECK(verify_td(g, *td).ok());
        CHECK(td->width() <= tw);
        if (tw > 0) CHECK_FALSE(exact_td(g, tw - 1).has_value());
    }
}

TEST_CASE("exact_td examples and cap") {
    CHECK(exact_td(gen_path(4), 1)->width() == 1);
    CHECK_FALSE(exact_td(gen_cycle(4), 1).has_value());
    CHECK(exact_td(gen_complete(4), 3)->width() == 3);
    CHECK_THROWS_AS(exact_td(gen_path(16), 1), CapacityError);
}

TEST_CASE("balancing a single bag") {
    const Graph k3 = gen_complete(3);
    const BalancedDecomposition bal = balance_td(k3, {{{0, 1, 2}}, {}});
    CHECK(bal.td.num_nodes() == 1);
    CHECK(bal.height() == 0);
}

TEST_CASE("balancing a long path decomposition") {
    const int n = 1025;
    const Graph p = gen_path(n);
    TreeDecomposition td;
    for (int i = 0; i + 1 < n; ++i) {
        td.bags.push_back({i, i + 1});
        if (i > 0) td.tree_edges.emplace_back(i - 1, i);
    }
    const BalancedDecomposition bal = balance_td(p, td);
    CHECK(verify_td(p, bal.td).ok());
    CHECK(bal.td.width() <= 5);
    CHECK(bal.height() <= 44);
    for (const auto& kids : bal.children) CHECK(kids.size() <= 2);
}

TEST_CASE("balancing contract on random decompositions") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 60), 0.02 + 0.2 * rng.unit(), rng);
        const TreeDecomposition td = heuristic_td(g, EliminationStrategy::MinDegree, trial);
        const BalancedDecomposition bal = balance_td(g, td);
        CHECK(verify_td(g, bal.td).ok());
        CHECK(bal.td.width() <= 3 * td.width() + 2);
        CHECK(bal.height() <= 4 * (1 + std::log2(static_cast<double>(td.num_nodes()))));
        for (const auto& kids : bal.children) CHECK(kids.size() <= 2);
        // Membership tables agree with a direct scan of every subtree.
        for (int x = 0; x < bal.td.num_nodes(); ++x) {
            std::vector<bool> present(static_cast<std::size_t>(g.num_vertices()), false);
            std::vector<int> stack{x};
            while (!stack.empty()) {
                const int y = stack.back();
                stack.pop_back();
                for (Vertex v : bal.td.bags[y]) present[v] = true;
                for (int c : bal.children[y]) stack.push_back(c);
            }
            for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(bal.in_subtree(x, v) == present[v]);
        }
    }
}
