#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"
#include "tpw/treewidth.hpp"

namespace tpw {

/// Block-degree rejection threshold: k(1 + (k-1)(b-2)) + k.
int degree_threshold(int k, int b);

struct Step1 {
    enum class Kind { Exact, Heuristic, Import };
    Kind kind = Kind::Heuristic;
    EliminationStrategy strategy = EliminationStrategy::MinFill;
    std::uint64_t seed = 0;
    std::string path;  ///< .td file for Kind::Import

    static Step1 exact() { return {Kind::Exact}; }
    static Step1 heuristic(EliminationStrategy strategy, std::uint64_t seed = 0) { return {Kind::Heuristic, strategy, seed}; }
    static Step1 import(std::string path) { return {Kind::Import, EliminationStrategy::MinFill, 0, std::move(path)}; }
};

struct PipelineParams {
    int k = 1;
    Step1 step1;
    std::optional<int> b_override;
    int threads = 1;
    /// Drive the separator walk with balance_td output instead of the Step 1 tree.
    bool balanced_walk = false;
};

struct TraceRecord {
    std::string step;
    std::vector<std::pair<std::string, double>> fields;

    std::optional<double> get(const std::string& key) const;
    /// `step=<name> key=value ...`
    std::string format() const;
};

struct TreewidthLB {
    int lb = 0;
};

struct LargeComponent {
    int b = 0;
    VertexSet vertices;
};

struct BlockDegree {
    int b = 0;
    /// Block of H as H-vertex ids, and the member parts as G-vertex sets.
    VertexSet block;
    std::vector<VertexSet> parts;
    Vertex vertex = -1;  ///< H-vertex
    int degree = 0;
    int threshold = 0;
};

using RejectionCertificate = std::variant<TreewidthLB, LargeComponent, BlockDegree>;

std::string describe(const RejectionCertificate& cert);

struct PipelineOutcome {
    bool accepted = false;
    TreePartition tp;
    int width = 0;
    std::optional<RejectionCertificate> certificate;
    std::vector<TraceRecord> trace;
    /// Step 1 decomposition and its transport to H, kept for inspection.
    TreeDecomposition td;
    TreeDecomposition td_h;
    int b = 0;
};

/// Runs Steps 1-5. Throws ParseError/ValidationError for a bad import file and
/// ContractViolation for k < 1 or a b_override below max(2k-1, w+1).
PipelineOutcome run_pipeline(const Graph& g, const PipelineParams& params);

/// Recomputes the witness from scratch (G^b over all pairs) and checks that it
/// is a genuine obstruction for width k.
bool validate_certificate(const Graph& g, int k, const RejectionCertificate& cert);

}  // namespace tpw
