#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"
#include "tpw/random.hpp"

namespace tpw {

// Extremal families. Layouts: grids and walls are row-major ((i, j) -> i*m + j);
// fans list the path first and the apex last; K_{a,b} lists the a-side first;
// tree multiples list the tree vertices first, then m new vertices per edge in
// sorted edge order.

Graph gen_grid(int m);
/// m-grid without the vertical edges (i,j)(i+1,j) with i+j even (1-based).
Graph gen_wall(int m);
Graph gen_fan(int m);
Graph gen_complete_bipartite(int a, int b);
Graph gen_multiple_tree(const Graph& tree, int m);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_star(int leaves);
/// Vertex i > 0 attaches to a uniform earlier vertex.
Graph gen_random_tree(int n, Rng& rng);
Graph gen_gnp(int n, double p, Rng& rng);

/// Appends a 2L-clique C_Z and joins its first L vertices to all of Z.
/// Returns the range of C_Z. Throws ContractViolation when Z is empty; the
/// caller guarantees that Z is a clique (gen_cluster_gadget checks it).
VertexRange add_cluster_gadget(GraphBuilder& builder, const VertexSet& z, int l);
Graph gen_cluster_gadget(const Graph& h, const VertexSet& z, int l);

/// Edge of a chained independent-set instance: node ids are 0-based, colour
/// classes and positions inside a class are 1-based.
struct TcmisEdge {
    int node_a = 0;
    int color_a = 1;
    int index_a = 1;
    int node_b = 0;
    int color_b = 1;
    int index_b = 1;
};

struct TcmisInstance {
    int tree_nodes = 1;
    /// Tree edges; the tree is rooted at node 0 and must be binary there.
    std::vector<std::pair<int, int>> tree_edges;
    int k = 1;
    int r = 1;
    std::vector<TcmisEdge> edges;
};

/// Checks one chosen position per (node, colour) against every edge.
bool tcmis_is_solution(const TcmisInstance& inst, const std::vector<std::vector<int>>& h);

struct ClusterRecord {
    std::string owner;  ///< "A:<trunk node>" or "CC:<node>:<colour>:<position>"
    VertexSet z;
    VertexRange c;
};

struct TcmisGadget {
    Graph h;
    int k = 1;
    int r = 1;
    int l = 0;             ///< 36k + 5
    int n_sub = 0;         ///< (m + 1) r subdivisions per tree edge
    int chain_length = 0;  ///< 2N + r + 5

    // Subdivided tree T', rooted at r_0. Nodes 0..|V_T|-1 are the original
    // nodes, then i' and r_0, then subdivision nodes.
    int trunk_nodes = 0;
    int extra_node = 0;  ///< i'
    int root_node = 0;   ///< r_0
    std::vector<int> trunk_parent;
    std::vector<int> p;
    std::vector<VertexRange> a;
    /// Edge index (0-based) whose check node this is, or -1.
    std::vector<int> check_edge;
    /// Per instance edge: the check node i_{e_j}.
    std::vector<int> edge_node;
    /// Per original node: the ancestor at distance 2(N+1) that its chains end at.
    std::vector<int> chain_end;

    /// chain[i][c-1][gamma-1].
    std::vector<std::vector<std::vector<VertexRange>>> chain;
    std::vector<ClusterRecord> clusters;
    int max_degree = 0;
    /// Positions dictated by an edge that fall outside a chain; skipped.
    std::vector<std::string> overshoots;

    /// Ancestor of trunk node x at distance d (-1 past the root).
    int ancestor(int x, int d) const;
};

/// Builds the trunk, clique chains and cluster gadgets. Throws
/// ContractViolation for malformed instances, a non-binary tree, or when a
/// trunk clique size L - 6k p - 1 or - 2 drops below 1.
TcmisGadget gen_tcmis_gadget(const TcmisInstance& inst);

struct TrunkOverflow {
    int node = -1;
    int size = 0;
    int edge = -1;  ///< check edge at the node, or -1
};

struct TcmisWitnessPartition {
    TreePartition tp;
    /// Trunk bags holding more than L vertices.
    std::vector<TrunkOverflow> overflows;
};

/// Folds every chain around the trunk according to the chosen positions
/// h[i][c-1] in [1, r]. Always returns a structure; a choice hitting both
/// endpoints of an edge shows up as an overflow at that edge's check node.
TcmisWitnessPartition tcmis_witness_to_partition(const TcmisGadget& gadget, const std::vector<std::vector<int>>& h);

struct DominoReduction {
    Graph h;
    int k = 1;
    int d = 0;
    int l = 0;  ///< kd + 1
    int m = 0;  ///< (k+1)L - 1
    std::vector<VertexRange> clique;  ///< C_v per vertex of G
    /// S_w per clique vertex w (indexed by w); its first vertex is y_w.
    std::map<Vertex, VertexRange> pendant;
    std::map<Edge, Vertex> z;
};

DominoReduction gen_domino_reduction(const Graph& g, int k);

/// Domino decomposition of the reduction from a tree-partition of G of width
/// at most k. Throws ContractViolation when tp is invalid or wider than k.
TreeDecomposition tp_witness_to_domino(const Graph& g, int k, const TreePartition& tp, const DominoReduction& red);

/// Width-3 partition of gen_complete_bipartite(3, m): the 3-side as root bag,
/// each other vertex in its own child bag.
TreePartition explicit_k3m_partition(int m);

}  // namespace tpw
