#pragma once

#include <utility>
#include <vector>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"

namespace tpw {

/// Separators are measured in G - st for adjacent and non-adjacent pairs alike.
/// Set to false to let the edge st count as one of the disjoint paths.
inline constexpr bool kSeparatorIgnoresEdge = true;

using VertexPair = std::pair<Vertex, Vertex>;

/// Unit-capacity max-flow on the vertex-split digraph of a fixed graph.
///
/// Vertex v becomes in(v) = 2v and out(v) = 2v+1 joined by a unit arc; every
/// edge uv becomes out(u)->in(v) and out(v)->in(u). Augmenting paths are found
/// by breadth-first search scanning arcs in vertex-id order. Not thread-safe;
/// use one engine per worker.
class SeparatorEngine {
public:
    explicit SeparatorEngine(const Graph& g);

    /// min(mu(s, t), cap). Throws ContractViolation when s == t.
    int mu(Vertex s, Vertex t, int cap);

private:
    struct Arc {
        int to;
        int rev;
        int cap;
        int base;
        Vertex u;  ///< host edge endpoints, or -1 for a vertex arc
        Vertex v;
    };

    void add_arc(int from, int to, Vertex u, Vertex v);
    bool augment(int source, int sink, Vertex s, Vertex t);

    int num_vertices_;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<std::pair<int, int>> touched_;  // (node, arc index) with flow
    std::vector<int> seen_;
    std::vector<std::pair<int, int>> via_;
    int stamp_ = 0;
};

/// Convenience wrapper building a fresh engine.
int mu(const Graph& g, Vertex s, Vertex t, int cap);

/// Deduplicated pairs (u < v) that co-occur in some bag, sorted.
std::vector<VertexPair> candidate_pairs(const TreeDecomposition& td);

/// Every unordered pair of vertices, sorted.
std::vector<VertexPair> all_pairs(int n);

/// G^b restricted to `pairs`: uv is an edge iff mu(u, v, b) >= b. With
/// threads > 1 pairs are split across workers; the result does not depend on it.
Graph build_gb(const Graph& g, int b, const std::vector<VertexPair>& pairs, int threads = 1);

/// Quotient of G by the connected components of G^b.
struct BReduction {
    Graph h;
    std::vector<int> part_of;
    std::vector<int> weight;
    /// Members of each part, sorted; parts are numbered by minimum vertex.
    std::vector<VertexSet> parts;
};

BReduction b_reduction(const Graph& g, const Graph& gb);

/// Replaces every bag by the set of parts it meets.
TreeDecomposition transport_td(const TreeDecomposition& td, const BReduction& red);

}  // namespace tpw
