#include <filesystem>

#include "doctest.h"
#include "tpw/errors.hpp"
#include "tpw/exact.hpp"
#include "tpw/gadgets.hpp"
#include "tpw/io.hpp"
#include "tpw/pipeline.hpp"
#include "oracles.hpp"

using namespace tpw;

namespace {

PipelineOutcome run(const Graph& g, int k, Step1 step1 = Step1::heuristic(EliminationStrategy::MinFill)) {
    PipelineParams p;
    p.k = k;
    p.step1 = std::move(step1);
    return run_pipeline(g, p);
}

}  // namespace

TEST_CASE("degree threshold") {
    CHECK(degree_threshold(1, 3) == 2);
    CHECK(degree_threshold(2, 6) == 12);
    CHECK(degree_threshold(3, 8) == 42);
}

TEST_CASE("clique rejected by the treewidth bound") {
    const PipelineOutcome out = run(gen_complete(6), 2);
    CHECK_FALSE(out.accepted);
    REQUIRE(out.certificate.has_value());
    const auto* lb = std::get_if<TreewidthLB>(&*out.certificate);
    REQUIRE(lb != nullptr);
    CHECK(lb->lb == 5);
    CHECK(validate_certificate(gen_complete(6), 2, *out.certificate));
}

TEST_CASE("four-cycle") {
    const Graph c4 = gen_cycle(4);
    // tw(C_4) = 2 exceeds 2k-1 at k = 1, so Step 1 already rejects.
    const PipelineOutcome one = run(c4, 1);
    CHECK_FALSE(one.accepted);
    REQUIRE(one.certificate.has_value());
    CHECK(std::get<TreewidthLB>(*one.certificate).lb == 2);

    const PipelineOutcome two = run(c4, 2);
    REQUIRE(two.accepted);
    // The whole cycle fits the one-bag stop rule |D| <= |S| + w + 1.
    CHECK(two.width == 4);
    CHECK(verify_tp(c4, two.tp).ok());
    CHECK(two.b == 3);
    CHECK(two.trace.size() == 5);
}

TEST_CASE("random tree at k = 1 is accepted with a pinned width") {
    Rng rng(50);
    const Graph tree = gen_random_tree(50, rng);
    const PipelineOutcome out = run(tree, 1);
    REQUIRE(out.accepted);
    CHECK(verify_tp(tree, out.tp).ok());
    CHECK(out.width == 2);
}

TEST_CASE("trace records all five steps with b >= max(2k-1, w+1)") {
    Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 30), 0.1, rng);
        const int k = rng.uniform(1, 4);
        const PipelineOutcome out = run(g, k);
        if (!out.accepted) continue;
        REQUIRE(out.trace.size() == 5);
        for (int i = 0; i < 5; ++i) CHECK(out.trace[i].step == "step" + std::to_string(i + 1));
        const int w = static_cast<int>(*out.trace[0].get("w"));
        CHECK(*out.trace[1].get("b") >= std::max(2 * k - 1, w + 1));
        CHECK(out.trace[4].format().starts_with("step=step5 width="));
    }
}

TEST_CASE("b override below the floor is a contract violation") {
    PipelineParams p;
    p.k = 2;
    p.b_override = 2;
    CHECK_THROWS_AS(run_pipeline(gen_cycle(5), p), ContractViolation);
    p.b_override = 6;
    CHECK(run_pipeline(gen_cycle(5), p).b == 6);
}

TEST_CASE("rejections are sound and certificates re-validate") {
    Rng rng(52);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(1, 9), 0.15 + 0.6 * rng.unit(), rng);
        const int k = rng.uniform(1, 3);
        const PipelineOutcome out = run(g, k, trial % 2 ? Step1::exact() : Step1::heuristic(EliminationStrategy::MinDegree, trial));
        if (out.accepted) {
            CHECK(verify_tp(g, out.tp).ok());
        } else {
            CHECK(validate_certificate(g, k, *out.certificate));
            CHECK_FALSE(exact_tpw(g, k).width.has_value());
        }
    }
}

TEST_CASE("threads and walk variants keep validity and agree on G^b") {
    Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(rng.uniform(5, 40), 0.1, rng);
        PipelineParams p;
        p.k = 3;
        const PipelineOutcome a = run_pipeline(g, p);
        p.threads = 3;
        const PipelineOutcome b = run_pipeline(g, p);
        CHECK(a.accepted == b.accepted);
        CHECK(a.tp.bags == b.tp.bags);
        p.balanced_walk = true;
        const PipelineOutcome c = run_pipeline(g, p);
        CHECK(c.accepted == a.accepted);
        if (c.accepted) CHECK(verify_tp(g, c.tp).ok());
    }
}

TEST_CASE("disconnected graphs are handled as a whole") {
    const Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}});
    const PipelineOutcome out = run(g, 2);
    REQUIRE(out.accepted);
    CHECK(verify_tp(g, out.tp).ok());
}

TEST_CASE("imported step 1 decompositions") {
    const auto dir = std::filesystem::temp_directory_path();
    const Graph c5 = gen_cycle(5);
    const std::string good = (dir / "tpw_import_ok.td").string();
    write_text(good, to_td({{{0, 1, 4}, {1, 3, 4}, {1, 2, 3}}, {{0, 1}, {1, 2}}}, 5));
    const PipelineOutcome out = run(c5, 2, Step1::import(good));
    REQUIRE(out.accepted);
    CHECK(verify_tp(c5, out.tp).ok());

    const std::string bad = (dir / "tpw_import_bad.td").string();
    write_text(bad, to_td({{{0, 1}, {1, 2, 3, 4}}, {{0, 1}}}, 5));
    CHECK_THROWS_AS(run(c5, 2, Step1::import(bad)), ValidationError);
    CHECK_THROWS(run(c5, 2, Step1::import((dir / "tpw_missing.td").string())));
}
