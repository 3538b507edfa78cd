#include "tpw/subdivision.hpp"

#include <algorithm>

#include "tpw/errors.hpp"

namespace tpw {

namespace {

struct RootedTree {
    std::vector<int> parent;
    std::vector<int> depth;
};

RootedTree root_tree(int nodes, const std::vector<TreeEdge>& edges, int root) {
    const auto adj = tree_adjacency(nodes, edges);
    RootedTree t{std::vector<int>(static_cast<std::size_t>(nodes), -1), std::vector<int>(static_cast<std::size_t>(nodes), -1)};
    std::vector<int> queue{root};
    t.depth[root] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int y : adj[queue[i]]) {
            if (t.depth[y] >= 0) continue;
            t.depth[y] = t.depth[queue[i]] + 1;
            t.parent[y] = queue[i];
            queue.push_back(y);
        }
    }
    return t;
}

/// Tree path from a to b, both ends included.
std::vector<int> tree_path(const RootedTree& t, int a, int b) {
    std::vector<int> up;
    std::vector<int> down;
    while (a != b) {
        if (t.depth[a] >= t.depth[b]) {
            up.push_back(a);
            a = t.parent[a];
        } else {
            down.push_back(b);
            b = t.parent[b];
        }
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

/// Appends bags {p_1, p_l}, {p_2, p_{l-1}}, ... as a chain below `anchor`.
void fold(const std::vector<Vertex>& path, int anchor, TreePartition& tp) {
    int parent = anchor;
    for (int lo = 0, hi = static_cast<int>(path.size()) - 1; lo <= hi; ++lo, --hi) {
        VertexSet bag{path[lo]};
        if (hi != lo) bag.push_back(path[hi]);
        std::sort(bag.begin(), bag.end());
        tp.bags.push_back(std::move(bag));
        const int id = tp.num_nodes() - 1;
        tp.tree_edges.emplace_back(parent, id);
        parent = id;
    }
}

}  // namespace

double tcd_bridge_bound(int k) { return 2.0 + k * (k + 2) / 2.0 + k; }

SubdividedPartition tcd_to_subdivision_tp(const Graph& g, const TreeCutDecomposition& tcd) {
    const TcdReport report = verify_tcd(g, tcd);
    if (!report.ok()) throw ContractViolation("tree-cut decomposition is invalid: " + report.violation->describe());
    if (!report.nice) {
        throw ContractViolation("tree-cut decomposition is not nice at thin node " + std::to_string(report.offending_node));
    }
    const int nodes = tcd.num_nodes();
    const RootedTree tree = root_tree(nodes, tcd.tree_edges, tcd.root);
    std::vector<int> node_of(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int i = 0; i < nodes; ++i) {
        for (Vertex v : tcd.bags[i]) node_of[v] = i;
    }
    std::map<Edge, int> counts;
    for (const Edge& e : g.edges()) {
        const int d = static_cast<int>(tree_path(tree, node_of[e.u], node_of[e.v]).size()) - 1;
        if (d > 0) counts[e] = d;
    }
    Subdivision sub = subdivide(g, counts);
    TreePartition tp;
    tp.bags = tcd.bags;
    tp.tree_edges = tcd.tree_edges;
    for (const auto& [e, path] : sub.paths) {
        const auto nodes_on_path = tree_path(tree, node_of[e.u], node_of[e.v]);
        const int a = nodes_on_path.front();
        const int b = nodes_on_path.back();
        const bool u_side_deeper = tree.depth[a] > tree.depth[b] || (tree.depth[a] == tree.depth[b] && a > b);
        // d path vertices on d-1 internal nodes plus the deeper endpoint's node.
        std::vector<int> targets;
        if (u_side_deeper) targets.push_back(a);
        targets.insert(targets.end(), nodes_on_path.begin() + 1, nodes_on_path.end() - 1);
        if (!u_side_deeper) targets.push_back(b);
        for (std::size_t i = 0; i < path.size(); ++i) tp.bags[targets[i]].push_back(path[i]);
    }
    for (auto& bag : tp.bags) std::sort(bag.begin(), bag.end());
    return {std::move(sub.graph), std::move(sub.paths), prune_empty_bags(tp)};
}

SubdividedPartition tp_lift_subdivision(const Graph& g, const TreePartition& tp, const std::map<Edge, int>& counts) {
    const VerifyResult check = verify_tp(g, tp);
    if (!check.ok()) throw ContractViolation("tree-partition is invalid: " + check.violation->describe());
    Subdivision sub = subdivide(g, counts);
    SubdividedPartition out{std::move(sub.graph), std::move(sub.paths), tp};
    if (tp.num_nodes() == 0) return out;
    const RootedTree tree = root_tree(tp.num_nodes(), tp.tree_edges, 0);
    const auto bag_of = tp.bag_of(g.num_vertices());
    for (const auto& [e, path] : out.paths) {
        if (path.empty()) continue;
        const int bu = bag_of[e.u];
        const int bv = bag_of[e.v];
        if (bu == bv) {
            fold(path, bu, out.tp);
            continue;
        }
        // Orient from the child-bag endpoint towards the parent-bag endpoint.
        std::vector<Vertex> ordered = path;
        int child = bu;
        if (tree.parent[bv] == bu) {
            std::reverse(ordered.begin(), ordered.end());
            child = bv;
        }
        out.tp.bags[child].push_back(ordered.back());
        ordered.pop_back();
        fold(ordered, child, out.tp);
    }
    for (auto& bag : out.tp.bags) std::sort(bag.begin(), bag.end());
    return out;
}

}  // namespace tpw
