#pragma once

#include <optional>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"

namespace tpw {

inline constexpr int kExactTpwCap = 12;
inline constexpr int kExactDominoCap = 10;

struct ExactTpwResult {
    /// Minimum width, or nullopt when it exceeds kmax. 0 for the empty graph.
    std::optional<int> width;
    /// Optimal tree-partition (empty when width is nullopt).
    TreePartition witness;
};

/// Exact tree-partition-width by iterative deepening per connected component.
/// The root bag holds the component's minimum vertex; every child bag must
/// contain the neighbours of its parent bag inside the child's component.
/// Throws CapacityError when n > cap.
ExactTpwResult exact_tpw(const Graph& g, int kmax, int cap = kExactTpwCap);

struct ExactDominoResult {
    std::optional<int> width;
    TreeDecomposition witness;
};

/// Exact domino treewidth. A vertex of degree above 2*kmax short-circuits to
/// "greater", since a domino bag pair holds at most 2k neighbours.
/// Throws CapacityError when n > cap.
ExactDominoResult exact_domino_tw(const Graph& g, int kmax, int cap = kExactDominoCap);

/// Minimum |S| over S subset of V - {s, t} separating s from t in G - st,
/// by subset enumeration. Requires n <= 16 and s != t.
int brute_mu(const Graph& g, Vertex s, Vertex t);

}  // namespace tpw
