#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"

namespace tpw {

enum class EliminationStrategy { MinDegree, MinFill };

/// Greedy elimination-ordering decomposition. Ties on the strategy score are
/// broken by a seed-salted hash of the vertex id and then by the id itself;
/// seed 0 disables the hash so ties resolve in plain id order.
TreeDecomposition heuristic_td(const Graph& g, EliminationStrategy strategy, std::uint64_t seed = 0);

/// Decomposition induced by eliminating vertices in `order` (a permutation of V).
/// Node i holds order[i] together with its later neighbours in the filled graph.
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& order);

/// Certified lower bound on treewidth: max of degeneracy and the minor-min-width
/// contraction bound (contract a minimum-degree vertex into its smallest neighbour).
int treewidth_lower_bound(const Graph& g);

inline constexpr int kExactTdCap = 15;

/// Exact search over elimination sets. Returns a decomposition of width <= k or
/// nullopt when none exists. Throws CapacityError when n exceeds `cap`.
std::optional<TreeDecomposition> exact_td(const Graph& g, int k, int cap = kExactTdCap);

/// Exact treewidth via exact_td with increasing k (same cap).
int exact_treewidth(const Graph& g, int cap = kExactTdCap);

/// Rooted binary decomposition with subtree-membership tables.
///
/// Vertices are ranked by the preorder index of the highest node whose bag
/// contains them, so the vertices first introduced inside the subtree of x have
/// ranks in [lo[x], hi[x]).
struct BalancedDecomposition {
    TreeDecomposition td;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> depth;
    std::vector<int> top;   ///< highest node containing each vertex
    std::vector<int> rank;  ///< per vertex
    std::vector<int> lo;
    std::vector<int> hi;

    int root() const { return td.root; }
    int height() const;
    /// True when v occurs in some bag of the subtree rooted at x.
    bool in_subtree(int x, Vertex v) const;
};

/// Rooted, binary decomposition of width at most 3w+2 and logarithmic depth.
BalancedDecomposition balance_td(const Graph& g, const TreeDecomposition& td);

/// Builds the membership tables for an already rooted decomposition; children
/// lists follow the tree adjacency order.
BalancedDecomposition index_td(int n, TreeDecomposition td);

}  // namespace tpw
