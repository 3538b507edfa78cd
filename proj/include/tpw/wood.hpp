#pragma once

#include <vector>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"
#include "tpw/separator.hpp"
#include "tpw/treewidth.hpp"

namespace tpw {

/// Constants of the degree-bounded tree-partition construction.
struct WoodConstants {
    static constexpr double alpha = 1.70710678118654752440;  // 1 + 1/sqrt(2)
    static constexpr double gamma = 2.41421356237309504880;  // 1 + sqrt(2)

    /// ceil((gamma+1)(w+1)); the product is irrational for w >= 0, so the
    /// ceiling of the double is exact.
    static int window_low(int w);
    /// floor(3(gamma+1)(w+1)Delta), exact for the same reason when Delta >= 1.
    static long window_high(int w, int delta);
    /// gamma(w+1)(3 gamma Delta - 1), the reference width.
    static double bound(int w, int delta);
};

/// Walks down from the root towards the child subtree holding most of W and
/// returns the first node whose bag leaves at most |W|/2 vertices of W in every
/// component of the graph minus the bag. Visits at most height+1 nodes.
int balanced_separator_bag(const BalancedDecomposition& bal, const VertexSet& w);

/// Tree-partition whose root bag (index 0) contains S. The recursion walks the
/// decomposition rooted as given (node 0 when unrooted).
TreePartition partition_rooted(const Graph& g, const TreeDecomposition& td, const VertexSet& s);

/// Same recursion driven by a prepared (for example balanced) decomposition.
TreePartition partition_rooted(const Graph& g, const BalancedDecomposition& bal, const VertexSet& s);

/// Tree-partition whose root bag (index 0) is exactly {v}.
TreePartition partition_isolated(const Graph& g, const TreeDecomposition& td, Vertex v);
TreePartition partition_isolated(const Graph& g, const BalancedDecomposition& bal, Vertex v);

/// Merges per-block partitions (global vertex ids). Each non-root block's
/// partition must hold its parent cutvertex as a singleton bag; that bag is
/// dropped and its neighbours re-attached to the cutvertex's bag in the parent
/// block. Root blocks of different components are chained through their first bags.
TreePartition combine_blocks(const Graph& h, const BlockForest& bf, const std::vector<TreePartition>& per_block);

/// Replaces each H-vertex by its part of the b-reduction.
TreePartition expand(const TreePartition& tp_h, const BReduction& red);

}  // namespace tpw
