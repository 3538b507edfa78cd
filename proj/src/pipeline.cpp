#include "tpw/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "tpw/errors.hpp"
#include "tpw/io.hpp"
#include "tpw/separator.hpp"
#include "tpw/wood.hpp"

namespace tpw {

int degree_threshold(int k, int b) {
    if (k < 1 || b < 2) throw ContractViolation("degree_threshold: requires k >= 1 and b >= 2");
    return k * (1 + (k - 1) * (b - 2)) + k;
}

std::optional<double> TraceRecord::get(const std::string& key) const {
    for (const auto& [name, value] : fields) {
        if (name == key) return value;
    }
    return std::nullopt;
}

std::string TraceRecord::format() const {
    std::ostringstream out;
    out << "step=" << step;
    for (const auto& [name, value] : fields) out << ' ' << name << '=' << value;
    return out.str();
}

std::string describe(const RejectionCertificate& cert) {
    std::ostringstream out;
    if (const auto* lb = std::get_if<TreewidthLB>(&cert)) {
        out << "treewidth-lb lb=" << lb->lb;
    } else if (const auto* large = std::get_if<LargeComponent>(&cert)) {
        out << "large-component b=" << large->b << " size=" << large->vertices.size();
    } else if (const auto* deg = std::get_if<BlockDegree>(&cert)) {
        out << "block-degree b=" << deg->b << " vertex=" << deg->vertex << " degree=" << deg->degree
            << " threshold=" << deg->threshold;
    }
    return out.str();
}

namespace {

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

TreeDecomposition step1_decomposition(const Graph& g, const Step1& step1) {
    switch (step1.kind) {
        case Step1::Kind::Exact: {
            for (int k = 0;; ++k) {
                if (auto td = exact_td(g, k)) return *td;
            }
        }
        case Step1::Kind::Heuristic:
            return heuristic_td(g, step1.strategy, step1.seed);
        case Step1::Kind::Import: {
            TdFile file = read_td(step1.path);
            if (file.n != g.num_vertices()) {
                throw ValidationError("imported decomposition covers " + std::to_string(file.n) + " vertices, graph has " +
                                      std::to_string(g.num_vertices()));
            }
            const VerifyResult check = verify_td(g, file.td);
            if (!check.ok()) throw ValidationError("imported decomposition invalid: " + check.violation->describe());
            return std::move(file.td);
        }
    }
    return {};
}

/// Largest component (ties by minimum vertex).
VertexSet largest_component(const Graph& gb) {
    VertexSet best;
    for (auto& comp : connected_components(gb)) {
        if (comp.size() > best.size()) best = std::move(comp);
    }
    return best;
}

}  // namespace

PipelineOutcome run_pipeline(const Graph& g, const PipelineParams& params) {
    const int k = params.k;
    if (k < 1) throw ContractViolation("pipeline: k must be at least 1");
    PipelineOutcome outcome;
    Stopwatch clock;

    // Step 1.
    const int lb = treewidth_lower_bound(g);
    if (lb > 2 * k - 1) {
        outcome.certificate = TreewidthLB{lb};
        outcome.trace.push_back({"step1", {{"lb", lb}, {"millis", clock.lap()}}});
        return outcome;
    }
    outcome.td = step1_decomposition(g, params.step1);
    const int w = std::max(0, outcome.td.width());
    int b = std::max(2 * k - 1, w + 1);
    if (params.b_override) {
        if (*params.b_override < b) {
            throw ContractViolation("b override " + std::to_string(*params.b_override) + " below max(2k-1, w+1) = " + std::to_string(b));
        }
        b = *params.b_override;
    }
    outcome.b = b;
    outcome.trace.push_back({"step1", {{"w", w}, {"lb", lb}, {"millis", clock.lap()}}});

    // Step 2.
    const Graph gb = build_gb(g, b, candidate_pairs(outcome.td), params.threads);
    VertexSet biggest = largest_component(gb);
    outcome.trace.push_back({"step2",
                             {{"b", b},
                              {"gb_edges", gb.num_edges()},
                              {"max_component", static_cast<double>(biggest.size())},
                              {"millis", clock.lap()}}});
    if (static_cast<int>(biggest.size()) > k) {
        outcome.certificate = LargeComponent{b, std::move(biggest)};
        return outcome;
    }

    // Step 3.
    const BReduction red = b_reduction(g, gb);
    const Graph& h = red.h;
    outcome.td_h = transport_td(outcome.td, red);
    const BlockForest bf = biconnected_components(h);
    outcome.trace.push_back({"step3",
                             {{"h_vertices", h.num_vertices()}, {"h_edges", h.num_edges()}, {"blocks", bf.num_blocks()}, {"millis", clock.lap()}}});

    // Step 4: degree audit over all blocks first, then partition each block.
    const int threshold = degree_threshold(k, std::max(b, 2));
    std::vector<InducedSubgraph> subgraphs;
    subgraphs.reserve(bf.blocks.size());
    int delta_h = 0;
    for (int i = 0; i < bf.num_blocks(); ++i) {
        subgraphs.push_back(induced_subgraph(h, bf.blocks[i]));
        const Graph& sub = subgraphs.back().graph;
        for (Vertex v = 0; v < sub.num_vertices(); ++v) {
            delta_h = std::max(delta_h, sub.degree(v));
            if (sub.degree(v) > threshold) {
                BlockDegree cert{b, bf.blocks[i], {}, bf.blocks[i][v], sub.degree(v), threshold};
                for (Vertex p : bf.blocks[i]) cert.parts.push_back(red.parts[p]);
                outcome.trace.push_back({"step4", {{"delta_H", sub.degree(v)}, {"threshold", threshold}, {"millis", clock.lap()}}});
                outcome.certificate = std::move(cert);
                return outcome;
            }
        }
    }
    const TdRestrictor restrictor(outcome.td_h, h.num_vertices());
    std::vector<TreePartition> per_block;
    per_block.reserve(bf.blocks.size());
    for (int i = 0; i < bf.num_blocks(); ++i) {
        const auto& block = bf.blocks[i];
        const Graph& sub = subgraphs[i].graph;
        const TreeDecomposition local_td = restrictor.restrict(block);
        const BalancedDecomposition bal =
            params.balanced_walk ? balance_td(sub, local_td) : index_td(sub.num_vertices(), local_td);
        TreePartition part;
        const Vertex cut = bf.parent_cutvertex[i];
        if (cut >= 0) {
            const Vertex local_cut = static_cast<Vertex>(std::lower_bound(block.begin(), block.end(), cut) - block.begin());
            part = partition_isolated(sub, bal, local_cut);
        } else {
            part = partition_rooted(sub, bal, VertexSet{0});
        }
        for (auto& bag : part.bags) {
            for (Vertex& v : bag) v = block[v];
        }
        per_block.push_back(std::move(part));
    }
    const TreePartition tp_h = combine_blocks(h, bf, per_block);
    outcome.trace.push_back({"step4", {{"delta_H", delta_h}, {"threshold", threshold}, {"width_H", tp_h.width()}, {"millis", clock.lap()}}});

    // Step 5.
    outcome.tp = expand(tp_h, red);
    outcome.width = outcome.tp.width();
    outcome.accepted = true;
    outcome.trace.push_back({"step5", {{"width", outcome.width}, {"millis", clock.lap()}}});
    return outcome;
}

bool validate_certificate(const Graph& g, int k, const RejectionCertificate& cert) {
    if (const auto* lb = std::get_if<TreewidthLB>(&cert)) {
        return lb->lb > 2 * k - 1 && treewidth_lower_bound(g) >= lb->lb;
    }
    if (const auto* large = std::get_if<LargeComponent>(&cert)) {
        if (large->b < 2 * k - 1 || static_cast<int>(large->vertices.size()) <= k) return false;
        const Graph gb = build_gb(g, large->b, all_pairs(g.num_vertices()));
        const auto labels = component_labels(gb);
        for (Vertex v : large->vertices) {
            if (v < 0 || v >= g.num_vertices() || labels[v] != labels[large->vertices.front()]) return false;
        }
        return true;
    }
    const auto& deg = std::get<BlockDegree>(cert);
    if (deg.b < 2 * k - 1 || deg.threshold != degree_threshold(k, std::max(deg.b, 2)) || deg.degree <= deg.threshold) return false;
    const BReduction red = b_reduction(g, build_gb(g, deg.b, all_pairs(g.num_vertices())));
    // The block is named by its member parts; map them to the recomputed H.
    VertexSet block;
    for (const auto& part : deg.parts) {
        if (part.empty()) return false;
        const int id = red.part_of[part.front()];
        if (red.parts[id] != part) return false;
        block.push_back(id);
    }
    std::sort(block.begin(), block.end());
    const BlockForest bf = biconnected_components(red.h);
    if (std::find(bf.blocks.begin(), bf.blocks.end(), block) == bf.blocks.end()) return false;
    const auto pos = std::find(deg.block.begin(), deg.block.end(), deg.vertex);
    if (pos == deg.block.end()) return false;
    const Vertex member = red.part_of[deg.parts[pos - deg.block.begin()].front()];
    const InducedSubgraph sub = induced_subgraph(red.h, block);
    const Vertex local = static_cast<Vertex>(std::lower_bound(block.begin(), block.end(), member) - block.begin());
    return sub.graph.degree(local) == deg.degree;
}

}  // namespace tpw
