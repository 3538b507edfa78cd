#include "tpw/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "tpw/errors.hpp"

namespace tpw {

namespace {

void check_structure(int n, const std::vector<VertexSet>& bags, const std::vector<TreeEdge>& edges) {
    const int nodes = static_cast<int>(bags.size());
    for (int i = 0; i < nodes; ++i) {
        for (Vertex v : bags[i]) {
            if (v < 0 || v >= n) {
                throw StructuralError("bag " + std::to_string(i) + " holds out-of-range vertex " + std::to_string(v));
            }
        }
    }
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes) {
            throw StructuralError("tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        }
    }
}

std::vector<VertexSet> normalized(const std::vector<VertexSet>& bags) {
    std::vector<VertexSet> out = bags;
    for (auto& bag : out) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    return out;
}

/// occurrences[v] = sorted node indices whose bag contains v.
std::vector<std::vector<int>> occurrences(int n, const std::vector<VertexSet>& bags) {
    std::vector<std::vector<int>> occ(static_cast<std::size_t>(n));
    for (int i = 0; i < static_cast<int>(bags.size()); ++i) {
        for (Vertex v : bags[i]) occ[v].push_back(i);
    }
    return occ;
}

bool share_node(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

/// Contracts nodes with empty bags into a neighbour chosen by a multi-source BFS
/// from nonempty nodes. Returns the group id per node (-1 when everything is empty)
/// and the number of groups; group ids follow the order of nonempty nodes.
std::pair<std::vector<int>, int> contraction_groups(const std::vector<VertexSet>& bags,
                                                    const std::vector<TreeEdge>& edges) {
    const int nodes = static_cast<int>(bags.size());
    const auto adj = tree_adjacency(nodes, edges);
    std::vector<int> group(static_cast<std::size_t>(nodes), -1);
    std::queue<int> queue;
    int groups = 0;
    for (int i = 0; i < nodes; ++i) {
        if (!bags[i].empty()) {
            group[i] = groups++;
            queue.push(i);
        }
    }
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop();
        for (int y : adj[x]) {
            if (group[y] == -1) {
                group[y] = group[x];
                queue.push(y);
            }
        }
    }
    return {std::move(group), groups};
}

std::vector<TreeEdge> contracted_edges(const std::vector<TreeEdge>& edges, const std::vector<int>& group) {
    std::set<TreeEdge> out;
    for (auto [a, b] : edges) {
        const int ga = group[a];
        const int gb = group[b];
        if (ga != gb && ga >= 0 && gb >= 0) out.emplace(std::min(ga, gb), std::max(ga, gb));
    }
    return {out.begin(), out.end()};
}

}  // namespace

int TreeDecomposition::width() const {
    int best = 0;
    for (const auto& bag : bags) best = std::max(best, static_cast<int>(bag.size()));
    return best - 1;
}

int TreePartition::width() const {
    int best = 0;
    for (const auto& bag : bags) best = std::max(best, static_cast<int>(bag.size()));
    return best;
}

std::vector<int> TreePartition::bag_of(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < num_nodes(); ++i) {
        for (Vertex v : bags[i]) {
            if (v >= 0 && v < n) out[v] = i;
        }
    }
    return out;
}

const char* clause_name(Clause clause) {
    switch (clause) {
        case Clause::Tree: return "tree";
        case Clause::EmptyBag: return "empty-bag";
        case Clause::VertexCoverage: return "vertex-coverage";
        case Clause::Partition: return "partition";
        case Clause::EdgeCoverage: return "edge-coverage";
        case Clause::Connectivity: return "connectivity";
        case Clause::EdgeLocality: return "edge-locality";
        case Clause::Domino: return "domino";
    }
    return "unknown";
}

std::string Violation::describe() const {
    std::ostringstream out;
    out << clause_name(clause);
    if (vertex >= 0) out << " vertex=" << vertex;
    if (edge) out << " edge=" << edge->u << "-" << edge->v;
    if (node >= 0) out << " node=" << node;
    return out.str();
}

std::vector<std::vector<int>> tree_adjacency(int num_nodes, const std::vector<TreeEdge>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_nodes));
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

bool is_tree(int num_nodes, const std::vector<TreeEdge>& edges) {
    if (num_nodes == 0) return edges.empty();
    if (static_cast<int>(edges.size()) != num_nodes - 1) return false;
    std::vector<int> parent(static_cast<std::size_t>(num_nodes));
    for (int i = 0; i < num_nodes; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        if (a == b) return false;
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

VerifyResult verify_td(const Graph& g, const TreeDecomposition& td) {
    const int n = g.num_vertices();
    check_structure(n, td.bags, td.tree_edges);
    const auto bags = normalized(td.bags);
    VerifyResult result;
    int largest = 0;
    for (const auto& bag : bags) largest = std::max(largest, static_cast<int>(bag.size()));
    result.width = largest - 1;

    if (!is_tree(td.num_nodes(), td.tree_edges) || (td.num_nodes() == 0 && n > 0)) {
        result.violation = Violation{Clause::Tree};
        return result;
    }
    const auto occ = occurrences(n, bags);
    for (Vertex v = 0; v < n; ++v) {
        if (occ[v].empty()) {
            result.violation = Violation{Clause::VertexCoverage, v};
            return result;
        }
    }
    for (const Edge& e : g.edges()) {
        if (!share_node(occ[e.u], occ[e.v])) {
            result.violation = Violation{Clause::EdgeCoverage, -1, e};
            return result;
        }
    }
    // Occurrence set of v is connected iff it spans |occ(v)| - 1 tree edges.
    std::vector<int> internal_edges(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : td.tree_edges) {
        const auto& ba = bags[a];
        const auto& bb = bags[b];
        auto i = ba.begin();
        auto j = bb.begin();
        while (i != ba.end() && j != bb.end()) {
            if (*i == *j) {
                ++internal_edges[*i];
                ++i;
                ++j;
            } else if (*i < *j) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (internal_edges[v] != static_cast<int>(occ[v].size()) - 1) {
            result.violation = Violation{Clause::Connectivity, v};
            return result;
        }
    }
    return result;
}

VerifyResult verify_domino(const Graph& g, const TreeDecomposition& td) {
    VerifyResult result = verify_td(g, td);
    if (!result.ok()) return result;
    const auto occ = occurrences(g.num_vertices(), normalized(td.bags));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (occ[v].size() > 2) {
            result.violation = Violation{Clause::Domino, v, std::nullopt, occ[v][2]};
            return result;
        }
    }
    return result;
}

VerifyResult verify_tp(const Graph& g, const TreePartition& tp) {
    const int n = g.num_vertices();
    check_structure(n, tp.bags, tp.tree_edges);
    const auto bags = normalized(tp.bags);
    VerifyResult result;
    for (const auto& bag : bags) result.width = std::max(result.width, static_cast<int>(bag.size()));

    if (!is_tree(tp.num_nodes(), tp.tree_edges) || (tp.num_nodes() == 0 && n > 0)) {
        result.violation = Violation{Clause::Tree};
        return result;
    }
    for (int i = 0; i < tp.num_nodes(); ++i) {
        if (bags[i].empty()) {
            result.violation = Violation{Clause::EmptyBag, -1, std::nullopt, i};
            return result;
        }
    }
    const auto occ = occurrences(n, bags);
    for (Vertex v = 0; v < n; ++v) {
        if (occ[v].size() > 1) {
            result.violation = Violation{Clause::Partition, v, std::nullopt, occ[v][1]};
            return result;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (occ[v].empty()) {
            result.violation = Violation{Clause::VertexCoverage, v};
            return result;
        }
    }
    std::set<TreeEdge> adjacent;
    for (auto [a, b] : tp.tree_edges) adjacent.emplace(std::min(a, b), std::max(a, b));
    for (const Edge& e : g.edges()) {
        const int a = occ[e.u][0];
        const int b = occ[e.v][0];
        if (a != b && !adjacent.contains({std::min(a, b), std::max(a, b)})) {
            result.violation = Violation{Clause::EdgeLocality, -1, e};
            return result;
        }
    }
    return result;
}

TcdReport verify_tcd(const Graph& g, const TreeCutDecomposition& tcd) {
    const int n = g.num_vertices();
    const int nodes = tcd.num_nodes();
    check_structure(n, tcd.bags, tcd.tree_edges);
    if (nodes > 0 && (tcd.root < 0 || tcd.root >= nodes)) throw StructuralError("root out of range");
    const auto bags = normalized(tcd.bags);

    TcdReport report;
    if (!is_tree(nodes, tcd.tree_edges) || (nodes == 0 && n > 0)) {
        report.violation = Violation{Clause::Tree};
        return report;
    }
    const auto occ = occurrences(n, bags);
    for (Vertex v = 0; v < n; ++v) {
        if (occ[v].size() > 1) {
            report.violation = Violation{Clause::Partition, v, std::nullopt, occ[v][1]};
            return report;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (occ[v].empty()) {
            report.violation = Violation{Clause::VertexCoverage, v};
            return report;
        }
    }
    if (nodes == 0) {
        report.nice = true;
        return report;
    }

    const auto adj = tree_adjacency(nodes, tcd.tree_edges);
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
    std::vector<int> depth(static_cast<std::size_t>(nodes), 0);
    std::vector<int> order{tcd.root};
    parent[tcd.root] = tcd.root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int x = order[i];
        for (int y : adj[x]) {
            if (parent[y] == -1) {
                parent[y] = x;
                depth[y] = depth[x] + 1;
                order.push_back(y);
            }
        }
    }
    parent[tcd.root] = -1;

    // An edge with endpoints in nodes a, b crosses e(t) for every t on the
    // a..b path other than the lowest common ancestor.
    report.cut_size.assign(static_cast<std::size_t>(nodes), 0);
    std::vector<int> offending;
    for (const Edge& e : g.edges()) {
        int a = occ[e.u][0];
        int b = occ[e.v][0];
        int last_a = -1;
        int last_b = -1;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                ++report.cut_size[a];
                last_a = a;
                a = parent[a];
            } else {
                ++report.cut_size[b];
                last_b = b;
                b = parent[b];
            }
        }
        if (last_a != -1 && last_b != -1) {
            offending.push_back(last_a);
            offending.push_back(last_b);
        }
    }

    report.adhesion.assign(static_cast<std::size_t>(nodes), 0);
    report.torso.assign(static_cast<std::size_t>(nodes), 0);
    for (int t = 0; t < nodes; ++t) {
        if (t != tcd.root) report.adhesion[t] = report.cut_size[t];
        int bold = 0;
        for (int y : adj[t]) {
            const int edge_owner = parent[y] == t ? y : t;
            if (report.cut_size[edge_owner] >= 3) ++bold;
        }
        report.torso[t] = static_cast<int>(bags[t].size()) + bold;
        report.width = std::max({report.width, report.adhesion[t], report.torso[t]});
    }

    // Sibling-subtree edges are only allowed between bold children.
    int worst = -1;
    for (int t : offending) {
        if (report.adhesion[t] <= 2 && (worst == -1 || t < worst)) worst = t;
    }
    report.offending_node = worst;
    report.nice = worst == -1;
    return report;
}

TreePartition prune_empty_bags(const TreePartition& tp) {
    auto [group, groups] = contraction_groups(tp.bags, tp.tree_edges);
    TreePartition out;
    out.bags.resize(static_cast<std::size_t>(groups));
    for (int i = 0; i < tp.num_nodes(); ++i) {
        if (!tp.bags[i].empty()) out.bags[group[i]] = tp.bags[i];
    }
    out.tree_edges = contracted_edges(tp.tree_edges, group);
    return out;
}

TreeDecomposition prune_empty_bags(const TreeDecomposition& td) {
    auto [group, groups] = contraction_groups(td.bags, td.tree_edges);
    TreeDecomposition out;
    out.bags.resize(static_cast<std::size_t>(groups));
    for (int i = 0; i < td.num_nodes(); ++i) {
        if (!td.bags[i].empty()) out.bags[group[i]] = td.bags[i];
    }
    out.tree_edges = contracted_edges(td.tree_edges, group);
    if (td.root >= 0 && td.root < td.num_nodes() && group[td.root] >= 0) out.root = group[td.root];
    return out;
}

TdRestrictor::TdRestrictor(const TreeDecomposition& td, int n)
    : td_(td), occurrences_(occurrences(n, td.bags)), adjacency_(tree_adjacency(td.num_nodes(), td.tree_edges)) {}

TreeDecomposition TdRestrictor::restrict(const VertexSet& keep) const {
    std::vector<int> nodes;
    for (Vertex v : keep) nodes.insert(nodes.end(), occurrences_[v].begin(), occurrences_[v].end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto local = [&](int x) {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
        return it != nodes.end() && *it == x ? static_cast<int>(it - nodes.begin()) : -1;
    };

    TreeDecomposition out;
    out.bags.resize(nodes.size());
    std::vector<int> parent(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        parent[i] = static_cast<int>(i);
        for (Vertex v : td_.bags[nodes[i]]) {
            const auto it = std::lower_bound(keep.begin(), keep.end(), v);
            if (it != keep.end() && *it == v) out.bags[i].push_back(static_cast<Vertex>(it - keep.begin()));
        }
        std::sort(out.bags[i].begin(), out.bags[i].end());
    }
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int y : adjacency_[nodes[i]]) {
            const int j = y > nodes[i] ? local(y) : -1;
            if (j < 0) continue;
            out.tree_edges.emplace_back(static_cast<int>(i), j);
            parent[find(static_cast<int>(i))] = find(j);
        }
    }
    int previous = -1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (find(static_cast<int>(i)) != static_cast<int>(i)) continue;
        if (previous >= 0) out.tree_edges.emplace_back(previous, static_cast<int>(i));
        previous = static_cast<int>(i);
    }
    if (!nodes.empty()) out.root = 0;
    return out;
}

TreeDecomposition restrict_td(const TreeDecomposition& td, const VertexSet& keep) {
    int n = 0;
    for (const auto& bag : td.bags) {
        for (Vertex v : bag) n = std::max(n, v + 1);
    }
    for (Vertex v : keep) n = std::max(n, v + 1);
    return TdRestrictor(td, n).restrict(keep);
}

TreeDecomposition partition_to_td(const TreePartition& tp) {
    TreeDecomposition td;
    td.tree_edges = tp.tree_edges;
    td.bags = tp.bags;
    if (tp.num_nodes() == 0) return td;
    td.root = 0;
    const auto adj = tree_adjacency(tp.num_nodes(), tp.tree_edges);
    std::vector<int> parent(static_cast<std::size_t>(tp.num_nodes()), -2);
    std::vector<int> stack{0};
    parent[0] = -1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adj[x]) {
            if (parent[y] != -2) continue;
            parent[y] = x;
            td.bags[y] = set_union(td.bags[y], tp.bags[x]);
            stack.push_back(y);
        }
    }
    return td;
}

}  // namespace tpw
