#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpw/graph.hpp"

namespace tpw {

using TreeEdge = std::pair<int, int>;

/// Tree decomposition: bags X_i on the nodes of a tree. Width is max |X_i| - 1.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<TreeEdge> tree_edges;
    /// Optional root node (-1 when unrooted).
    int root = -1;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    int width() const;
};

/// Tree-partition: disjoint nonempty bags covering V on the nodes of a tree.
/// Width is the largest bag size.
struct TreePartition {
    std::vector<VertexSet> bags;
    std::vector<TreeEdge> tree_edges;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    int width() const;
    /// Bag index per vertex (-1 when absent); assumes the bags are disjoint.
    std::vector<int> bag_of(int n) const;
};

/// Rooted tree with a near partition of V into (possibly empty) bags.
struct TreeCutDecomposition {
    std::vector<VertexSet> bags;
    std::vector<TreeEdge> tree_edges;
    int root = 0;

    int num_nodes() const { return static_cast<int>(bags.size()); }
};

/// Clause of a decomposition definition that a verifier found broken.
enum class Clause {
    Tree,            ///< tree edges do not form a tree on the nodes
    EmptyBag,        ///< tree-partition bag is empty
    VertexCoverage,  ///< vertex in no bag
    Partition,       ///< vertex in two bags of a (near) partition
    EdgeCoverage,    ///< edge not contained in any bag
    Connectivity,    ///< bags containing a vertex do not form a subtree
    EdgeLocality,    ///< edge endpoints in non-adjacent distinct bags
    Domino,          ///< vertex in three or more bags
};

const char* clause_name(Clause clause);

/// First violated clause in deterministic scan order, with one witness.
struct Violation {
    Clause clause = Clause::Tree;
    Vertex vertex = -1;
    std::optional<Edge> edge;
    int node = -1;

    std::string describe() const;
};

struct VerifyResult {
    int width = 0;
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
};

/// Checks the tree decomposition axioms and returns the width.
/// Throws StructuralError on out-of-range bag or vertex indices.
VerifyResult verify_td(const Graph& g, const TreeDecomposition& td);

/// Checks the tree-partition axioms (including nonempty bags) and returns the width.
VerifyResult verify_tp(const Graph& g, const TreePartition& tp);

/// verify_td plus the rule that no vertex occurs in more than two bags.
VerifyResult verify_domino(const Graph& g, const TreeDecomposition& td);

struct TcdReport {
    int width = 0;
    bool nice = false;
    /// First thin node whose subtree has neighbours in a sibling subtree.
    int offending_node = -1;
    std::vector<int> adhesion;
    std::vector<int> torso;
    /// |cut(e(t))| per node (0 at the root).
    std::vector<int> cut_size;
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
};

/// Recomputes cut sets, adhesion, torso sizes, width and niceness from scratch.
TcdReport verify_tcd(const Graph& g, const TreeCutDecomposition& tcd);

/// Checks that `edges` form a spanning tree on `num_nodes` nodes.
bool is_tree(int num_nodes, const std::vector<TreeEdge>& edges);

/// Adjacency lists of a tree given by its edge list.
std::vector<std::vector<int>> tree_adjacency(int num_nodes, const std::vector<TreeEdge>& edges);

/// Contracts every empty bag into a neighbour. Width and validity are unchanged.
TreePartition prune_empty_bags(const TreePartition& tp);

/// Removes empty bags of a tree decomposition by contraction.
TreeDecomposition prune_empty_bags(const TreeDecomposition& td);

/// Restricts a decomposition to the vertex subset `keep` (sorted), relabelling
/// vertices to their rank in `keep`. Only nodes whose bags meet `keep` survive.
TreeDecomposition restrict_td(const TreeDecomposition& td, const VertexSet& keep);

/// Repeated restrictions of one decomposition to vertex subsets. Only nodes whose
/// bags meet the subset are kept; when they fall apart in the tree the pieces
/// are chained, which stays valid because each vertex lives in a single piece.
class TdRestrictor {
public:
    TdRestrictor(const TreeDecomposition& td, int n);

    /// Bags use the rank of each vertex in `keep` (sorted).
    TreeDecomposition restrict(const VertexSet& keep) const;

private:
    const TreeDecomposition& td_;
    std::vector<std::vector<int>> occurrences_;
    std::vector<std::vector<int>> adjacency_;
};

/// Tree decomposition whose bags are B_i united with the parent bag; width at most 2w-1.
TreeDecomposition partition_to_td(const TreePartition& tp);

}  // namespace tpw
