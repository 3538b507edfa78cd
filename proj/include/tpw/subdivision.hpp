#pragma once

#include <map>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"

namespace tpw {

struct SubdividedPartition {
    Graph graph;
    SubdivisionMap paths;
    TreePartition tp;
};

/// Subdivides each edge uv as often as the tree distance between the nodes of
/// u and v and places the new vertices on the nodes between them; when the
/// path has no spare internal node the extra vertex goes to the deeper
/// endpoint's node (larger node id on ties). Empty bags are pruned.
/// Throws ContractViolation when the decomposition is invalid or not nice.
SubdividedPartition tcd_to_subdivision_tp(const Graph& g, const TreeCutDecomposition& tcd);

/// Width bound for tcd_to_subdivision_tp at tree-cut width k.
double tcd_bridge_bound(int k);

/// Partition of subdivide(g, counts) from a partition of g rooted at bag 0.
/// Same-bag edges fold into a fresh branch starting at the smaller endpoint;
/// an edge to the parent bag puts the path vertex next to the parent into the
/// child bag and folds the rest below the child bag.
/// Throws ContractViolation when tp is not a valid partition of g.
SubdividedPartition tp_lift_subdivision(const Graph& g, const TreePartition& tp, const std::map<Edge, int>& counts);

}  // namespace tpw
