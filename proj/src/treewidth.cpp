#include "tpw/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <tuple>

#include "tpw/errors.hpp"

namespace tpw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using AdjSets = std::vector<std::set<Vertex>>;

AdjSets adjacency_sets(const Graph& g) {
    AdjSets adj(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto nb = g.neighbors(v);
        adj[v].insert(nb.begin(), nb.end());
    }
    return adj;
}

long fill_in(const AdjSets& adj, Vertex v) {
    long missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
        for (auto b = std::next(a); b != adj[v].end(); ++b) {
            if (!adj[*a].contains(*b)) ++missing;
        }
    }
    return missing;
}

/// Turns N(v) into a clique and deletes v.
void eliminate(AdjSets& adj, Vertex v) {
    const std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
        adj[nb[i]].erase(v);
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            adj[nb[i]].insert(nb[j]);
            adj[nb[j]].insert(nb[i]);
        }
    }
    adj[v].clear();
}

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> out(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Vertex u : g.neighbors(v)) out[v] |= Mask{1} << u;
    }
    return out;
}

/// Vertices outside eliminated ∪ {v} reachable from v through eliminated vertices.
Mask reach_through(const std::vector<Mask>& adj, Mask eliminated, Vertex v) {
    Mask seen = Mask{1} << v;
    Mask frontier = seen;
    Mask result = 0;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= ~seen;
        seen |= next;
        result |= next & ~eliminated;
        frontier = next & eliminated;
    }
    return result;
}

}  // namespace

TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n) throw ContractViolation("elimination order must list every vertex");
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || position[order[i]] != -1) {
            throw ContractViolation("elimination order is not a permutation");
        }
        position[order[i]] = i;
    }
    AdjSets adj = adjacency_sets(g);
    TreeDecomposition td;
    td.bags.resize(static_cast<std::size_t>(n));
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[i];
        VertexSet bag(adj[v].begin(), adj[v].end());
        int parent = -1;
        for (Vertex u : bag) {
            if (parent == -1 || position[u] < parent) parent = position[u];
        }
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        td.bags[i] = std::move(bag);
        if (parent == -1) {
            roots.push_back(i);
        } else {
            td.tree_edges.emplace_back(i, parent);
        }
        eliminate(adj, v);
    }
    for (std::size_t j = 1; j < roots.size(); ++j) td.tree_edges.emplace_back(roots[j - 1], roots[j]);
    return td;
}

TreeDecomposition heuristic_td(const Graph& g, EliminationStrategy strategy, std::uint64_t seed) {
    const int n = g.num_vertices();
    AdjSets adj = adjacency_sets(g);
    auto salt = [seed](Vertex v) { return seed == 0 ? std::uint64_t{0} : splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(v))); };
    auto score = [&](Vertex v) {
        return strategy == EliminationStrategy::MinDegree ? static_cast<long>(adj[v].size()) : fill_in(adj, v);
    };

    using Key = std::tuple<long, std::uint64_t, Vertex>;
    std::set<Key> queue;
    std::vector<long> current(static_cast<std::size_t>(n));
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) {
        current[v] = score(v);
        queue.emplace(current[v], salt(v), v);
    }
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        const Vertex v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());
        done[v] = true;
        order.push_back(v);
        std::set<Vertex> touched(adj[v].begin(), adj[v].end());
        eliminate(adj, v);
        if (strategy == EliminationStrategy::MinFill) {
            for (Vertex u : std::vector<Vertex>(touched.begin(), touched.end())) touched.insert(adj[u].begin(), adj[u].end());
        }
        for (Vertex u : touched) {
            if (done[u]) continue;
            const long updated = score(u);
            if (updated == current[u]) continue;
            queue.erase({current[u], salt(u), u});
            current[u] = updated;
            queue.emplace(updated, salt(u), u);
        }
    }
    return td_from_elimination(g, order);
}

int treewidth_lower_bound(const Graph& g) {
    const int n = g.num_vertices();
    int best = 0;

    // Degeneracy.
    {
        AdjSets adj = adjacency_sets(g);
        std::set<std::pair<int, Vertex>> queue;
        for (Vertex v = 0; v < n; ++v) queue.emplace(static_cast<int>(adj[v].size()), v);
        while (!queue.empty()) {
            const auto [d, v] = *queue.begin();
            queue.erase(queue.begin());
            best = std::max(best, d);
            for (Vertex u : adj[v]) {
                queue.erase({static_cast<int>(adj[u].size()), u});
                adj[u].erase(v);
                queue.emplace(static_cast<int>(adj[u].size()), u);
            }
            adj[v].clear();
        }
    }

    // Minor-min-width with the min-d contraction rule.
    {
        AdjSets adj = adjacency_sets(g);
        std::set<std::pair<int, Vertex>> queue;
        for (Vertex v = 0; v < n; ++v) queue.emplace(static_cast<int>(adj[v].size()), v);
        while (!queue.empty()) {
            const auto [d, v] = *queue.begin();
            queue.erase(queue.begin());
            best = std::max(best, d);
            if (d == 0) continue;
            Vertex target = -1;
            for (Vertex u : adj[v]) {
                if (target == -1 || adj[u].size() < adj[target].size()) target = u;
            }
            std::vector<Vertex> affected(adj[v].begin(), adj[v].end());
            for (Vertex u : affected) queue.erase({static_cast<int>(adj[u].size()), u});
            for (Vertex u : affected) {
                adj[u].erase(v);
                if (u != target) {
                    adj[u].insert(target);
                    adj[target].insert(u);
                }
            }
            adj[v].clear();
            for (Vertex u : affected) queue.emplace(static_cast<int>(adj[u].size()), u);
        }
    }
    return best;
}

std::optional<TreeDecomposition> exact_td(const Graph& g, int k, int cap) {
    const int n = g.num_vertices();
    if (n > cap || n > 24) throw CapacityError("exact_td: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (k < 0) return std::nullopt;
    if (n == 0) return TreeDecomposition{};
    const auto adj = adjacency_masks(g);
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<std::int8_t> last(std::size_t{1} << n, -1);
    std::vector<bool> ok(std::size_t{1} << n, false);
    ok[0] = true;
    for (Mask s = 0; s < full; ++s) {
        if (!ok[s]) continue;
        for (Mask free = full & ~s; free != 0; free &= free - 1) {
            const Vertex v = std::countr_zero(free);
            const Mask t = s | (Mask{1} << v);
            if (ok[t]) continue;
            if (std::popcount(reach_through(adj, s, v)) <= k) {
                ok[t] = true;
                last[t] = static_cast<std::int8_t>(v);
            }
        }
    }
    if (!ok[full]) return std::nullopt;
    std::vector<Vertex> order;
    for (Mask s = full; s != 0; s &= ~(Mask{1} << last[s])) order.push_back(last[s]);
    std::reverse(order.begin(), order.end());
    return td_from_elimination(g, order);
}

int exact_treewidth(const Graph& g, int cap) {
    for (int k = 0; k < g.num_vertices(); ++k) {
        if (exact_td(g, k, cap)) return k;
    }
    return 0;
}

int BalancedDecomposition::height() const {
    int best = 0;
    for (int d : depth) best = std::max(best, d);
    return best;
}

bool BalancedDecomposition::in_subtree(int x, Vertex v) const {
    const int r = rank[v];
    if (r >= lo[x] && r < hi[x]) return true;
    const auto& bag = td.bags[x];
    return std::binary_search(bag.begin(), bag.end(), v);
}

BalancedDecomposition index_td(int n, TreeDecomposition td) {
    BalancedDecomposition out;
    const int nodes = td.num_nodes();
    if (td.root < 0 && nodes > 0) td.root = 0;
    out.parent.assign(static_cast<std::size_t>(nodes), -1);
    out.children.assign(static_cast<std::size_t>(nodes), {});
    out.depth.assign(static_cast<std::size_t>(nodes), 0);
    out.top.assign(static_cast<std::size_t>(n), -1);
    out.rank.assign(static_cast<std::size_t>(n), 0);
    out.lo.assign(static_cast<std::size_t>(nodes), 0);
    out.hi.assign(static_cast<std::size_t>(nodes), 0);
    if (nodes == 0) {
        for (Vertex v = 0; v < n; ++v) out.rank[v] = v;
        out.td = std::move(td);
        return out;
    }
    const auto adj = tree_adjacency(nodes, td.tree_edges);
    std::vector<int> preorder;
    std::vector<int> tin(static_cast<std::size_t>(nodes), -1);
    std::vector<int> tout(static_cast<std::size_t>(nodes), 0);
    std::vector<std::pair<int, std::size_t>> stack{{td.root, 0}};
    tin[td.root] = 0;
    preorder.push_back(td.root);
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        if (next < adj[x].size()) {
            const int y = adj[x][next++];
            if (y == out.parent[x] || tin[y] != -1) continue;
            out.parent[y] = x;
            out.depth[y] = out.depth[x] + 1;
            out.children[x].push_back(y);
            tin[y] = static_cast<int>(preorder.size());
            preorder.push_back(y);
            stack.emplace_back(y, 0);
        } else {
            tout[x] = static_cast<int>(preorder.size());
            stack.pop_back();
        }
    }
    for (int x : preorder) {
        for (Vertex v : td.bags[x]) {
            if (out.top[v] == -1) out.top[v] = x;
        }
    }
    // Counting sort of vertices by the preorder index of their top node.
    std::vector<int> count(static_cast<std::size_t>(nodes) + 2, 0);
    for (Vertex v = 0; v < n; ++v) ++count[out.top[v] == -1 ? nodes + 1 : tin[out.top[v]] + 1];
    for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    std::vector<int> cursor(count.begin(), count.end());
    for (Vertex v = 0; v < n; ++v) {
        const int slot = out.top[v] == -1 ? nodes : tin[out.top[v]];
        out.rank[v] = cursor[slot]++;
    }
    for (int x = 0; x < nodes; ++x) {
        out.lo[x] = count[tin[x]];
        out.hi[x] = count[tout[x]];
    }
    out.td = std::move(td);
    return out;
}

namespace {

class Balancer {
public:
    Balancer(const TreeDecomposition& td)
        : td_(td), adj_(tree_adjacency(td.num_nodes(), td.tree_edges)), owner_(td.bags.size(), 0) {}

    TreeDecomposition run() {
        std::vector<int> all(static_cast<std::size_t>(td_.num_nodes()));
        for (int i = 0; i < td_.num_nodes(); ++i) all[i] = i;
        stamp_ = 1;
        for (int& o : owner_) o = stamp_;
        out_.root = build(all, stamp_, {});
        return std::move(out_);
    }

private:
    using Boundary = std::vector<std::pair<int, int>>;  // (inside, outside)

    int new_node(VertexSet bag) {
        out_.bags.push_back(std::move(bag));
        return out_.num_nodes() - 1;
    }

    VertexSet interface(const Boundary& boundary) const {
        VertexSet out;
        for (auto [x, y] : boundary) {
            VertexSet shared;
            std::set_intersection(td_.bags[x].begin(), td_.bags[x].end(), td_.bags[y].begin(), td_.bags[y].end(),
                                  std::back_inserter(shared));
            out = set_union(out, shared);
        }
        return out;
    }

    /// BFS order and parents of the piece labelled `label`, starting at `start`.
    std::pair<std::vector<int>, std::vector<int>> bfs(int start, int label) {
        std::vector<int> order{start};
        std::vector<int> par{-1};
        visit_[start] = ++visit_stamp_;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (int y : adj_[order[i]]) {
                if (owner_[y] == label && visit_[y] != visit_stamp_) {
                    visit_[y] = visit_stamp_;
                    order.push_back(y);
                    par.push_back(static_cast<int>(i));
                }
            }
        }
        return {order, par};
    }

    int choose_split(const std::vector<int>& piece, int label, const Boundary& boundary) {
        if (piece.size() == 1) return piece[0];
        const auto [order, par] = bfs(piece[0], label);
        const int total = static_cast<int>(order.size());
        std::vector<int> size(order.size(), 1);
        std::vector<int> heaviest(order.size(), 0);
        for (int i = total - 1; i > 0; --i) {
            size[par[i]] += size[i];
            heaviest[par[i]] = std::max(heaviest[par[i]], size[i]);
        }
        int centroid = order[0];
        for (int i = 0; i < total; ++i) {
            if (std::max(heaviest[i], total - size[i]) * 2 <= total) {
                centroid = order[i];
                break;
            }
        }
        if (boundary.size() < 2) return centroid;

        // Project the centroid onto the path between the two boundary nodes.
        const auto [from_a, par_a] = bfs(boundary[0].first, label);
        std::vector<bool> on_path(td_.bags.size(), false);
        int idx = static_cast<int>(std::find(from_a.begin(), from_a.end(), boundary[1].first) - from_a.begin());
        while (idx != -1) {
            on_path[from_a[idx]] = true;
            idx = par_a[idx];
        }
        const auto [from_c, par_c] = bfs(centroid, label);
        for (int x : from_c) {
            if (on_path[x]) return x;
        }
        return centroid;
    }

    int build(const std::vector<int>& piece, int label, const Boundary& boundary) {
        const int c = choose_split(piece, label, boundary);
        const VertexSet bag = set_union(td_.bags[c], interface(boundary));
        const int self = new_node(bag);
        owner_[c] = 0;

        struct Child {
            std::vector<int> nodes;
            int label;
            Boundary boundary;
        };
        std::vector<Child> parts;
        for (int y : adj_[c]) {
            if (owner_[y] != label) continue;
            Child part;
            part.label = ++stamp_;
            auto [order, par] = bfs(y, label);
            for (int x : order) owner_[x] = part.label;
            part.nodes = std::move(order);
            part.boundary.emplace_back(y, c);
            parts.push_back(std::move(part));
        }
        for (auto [x, outside] : boundary) {
            for (auto& part : parts) {
                if (owner_[x] == part.label) part.boundary.emplace_back(x, outside);
            }
        }

        // Huffman merge keeps the output binary without deep chains.
        using Item = std::tuple<long, int, int>;  // weight, tiebreak, node
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        int tiebreak = 0;
        for (auto& part : parts) {
            const long weight = static_cast<long>(part.nodes.size());
            const int child = build(part.nodes, part.label, part.boundary);
            queue.emplace(weight, tiebreak++, child);
        }
        while (queue.size() > 2) {
            auto [wa, ta, a] = queue.top();
            queue.pop();
            auto [wb, tb, b] = queue.top();
            queue.pop();
            const int copy = new_node(bag);
            out_.tree_edges.emplace_back(copy, a);
            out_.tree_edges.emplace_back(copy, b);
            queue.emplace(wa + wb, tiebreak++, copy);
        }
        while (!queue.empty()) {
            out_.tree_edges.emplace_back(self, std::get<2>(queue.top()));
            queue.pop();
        }
        return self;
    }

    const TreeDecomposition& td_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> owner_;
    std::vector<int> visit_ = std::vector<int>(owner_.size(), 0);
    int visit_stamp_ = 0;
    int stamp_ = 0;
    TreeDecomposition out_;
};

}  // namespace

BalancedDecomposition balance_td(const Graph& g, const TreeDecomposition& td) {
    if (!is_tree(td.num_nodes(), td.tree_edges)) throw ContractViolation("balance_td: decomposition tree is not a tree");
    if (td.num_nodes() == 0) return index_td(g.num_vertices(), td);
    Balancer balancer(td);
    return index_td(g.num_vertices(), balancer.run());
}

}  // namespace tpw
