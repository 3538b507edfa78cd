#include "doctest.h"
#include "tpw/errors.hpp"
#include "tpw/exact.hpp"
#include "tpw/gadgets.hpp"
#include "oracles.hpp"

using namespace tpw;

TEST_CASE("exact tree-partition-width examples") {
    CHECK(exact_tpw(gen_path(7), 5).width == 1);
    CHECK(exact_tpw(gen_cycle(5), 5).width == 2);
    CHECK(exact_tpw(gen_complete(5), 5).width == 3);
    CHECK(exact_tpw(Graph(0), 3).width == 0);
    CHECK_FALSE(exact_tpw(gen_complete(5), 2).width.has_value());
    CHECK_THROWS_AS(exact_tpw(gen_path(13), 3), CapacityError);
}

TEST_CASE("exact witnesses verify at the reported width") {
    Rng rng(60);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 10), 0.1 + 0.6 * rng.unit(), rng);
        const ExactTpwResult r = exact_tpw(g, 10);
        REQUIRE(r.width.has_value());
        const VerifyResult v = verify_tp(g, r.witness);
        CHECK(v.ok());
        CHECK(v.width == *r.width);
    }
}

TEST_CASE("exact tree-partition-width matches set-partition enumeration") {
    Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 7), 0.1 + 0.7 * rng.unit(), rng);
        CHECK(exact_tpw(g, 7).width == oracle::brute_tpw(g));
    }
}

TEST_CASE("brute-force separators") {
    CHECK(brute_mu(gen_path(3), 0, 2) == 1);
    CHECK(brute_mu(gen_complete(4), 0, 1) == 2);
    CHECK(brute_mu(Graph::from_edges(4, {{0, 1}, {2, 3}}), 0, 2) == 0);
    CHECK_THROWS_AS(brute_mu(gen_path(3), 1, 1), ContractViolation);
}

TEST_CASE("exact domino treewidth examples") {
    CHECK(exact_domino_tw(gen_path(4), 3).width == 1);
    CHECK(exact_domino_tw(gen_complete(3), 3).width == 2);
    CHECK_FALSE(exact_domino_tw(gen_star(5), 2).width.has_value());
    CHECK(exact_domino_tw(gen_star(5), 3).width == 3);
    CHECK_THROWS_AS(exact_domino_tw(gen_path(11), 3), CapacityError);
}

TEST_CASE("domino witnesses verify and bound treewidth from above") {
    Rng rng(62);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 8), 0.1 + 0.5 * rng.unit(), rng);
        const ExactDominoResult r = exact_domino_tw(g, 8);
        REQUIRE(r.width.has_value());
        const VerifyResult v = verify_domino(g, r.witness);
        CHECK(v.ok());
        CHECK(v.width == *r.width);
        CHECK(*r.width >= oracle::brute_treewidth(g));
        if (*r.width > 0) CHECK_FALSE(exact_domino_tw(g, *r.width - 1).width.has_value());
    }
}
