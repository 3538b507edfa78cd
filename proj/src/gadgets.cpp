#include "tpw/gadgets.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "tpw/errors.hpp"

namespace tpw {

Graph gen_grid(int m) {
    if (m < 1) throw ContractViolation("gen_grid: m must be at least 1");
    GraphBuilder b(m * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (j + 1 < m) b.add_edge(i * m + j, i * m + j + 1);
            if (i + 1 < m) b.add_edge(i * m + j, (i + 1) * m + j);
        }
    }
    return std::move(b).build();
}

Graph gen_wall(int m) {
    if (m < 1) throw ContractViolation("gen_wall: m must be at least 1");
    GraphBuilder b(m * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (j + 1 < m) b.add_edge(i * m + j, i * m + j + 1);
            // 1-based (i+1, j+1): drop the edge down when the coordinate sum is even.
            if (i + 1 < m && (i + j) % 2 != 0) b.add_edge(i * m + j, (i + 1) * m + j);
        }
    }
    return std::move(b).build();
}

Graph gen_fan(int m) {
    if (m < 1) throw ContractViolation("gen_fan: m must be at least 1");
    GraphBuilder b(m + 1);
    for (int i = 0; i < m; ++i) {
        if (i + 1 < m) b.add_edge(i, i + 1);
        b.add_edge(i, m);
    }
    return std::move(b).build();
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw ContractViolation("gen_complete_bipartite: negative side");
    GraphBuilder builder(a + b);
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) builder.add_edge(u, a + v);
    }
    return std::move(builder).build();
}

Graph gen_multiple_tree(const Graph& tree, int m) {
    if (m < 1) throw ContractViolation("gen_multiple_tree: m must be at least 1");
    if (!is_tree(tree.num_vertices(), [&] {
            std::vector<TreeEdge> edges;
            for (const Edge& e : tree.edges()) edges.emplace_back(e.u, e.v);
            return edges;
        }())) {
        throw ContractViolation("gen_multiple_tree: input is not a tree");
    }
    GraphBuilder b(tree.num_vertices());
    for (const Edge& e : tree.edges()) {
        const Vertex first = b.add_vertices(m);
        for (int i = 0; i < m; ++i) {
            b.add_edge(e.u, first + i);
            b.add_edge(first + i, e.v);
        }
    }
    return std::move(b).build();
}

Graph gen_path(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph gen_cycle(int n) {
    if (n < 3) throw ContractViolation("gen_cycle: n must be at least 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph gen_complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph gen_star(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return std::move(b).build();
}

Graph gen_random_tree(int n, Rng& rng) {
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(rng.uniform(0, i - 1), i);
    return std::move(b).build();
}

Graph gen_gnp(int n, double p, Rng& rng) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

VertexRange add_cluster_gadget(GraphBuilder& builder, const VertexSet& z, int l) {
    if (z.empty()) throw ContractViolation("cluster gadget needs a nonempty clique");
    if (l < 1) throw ContractViolation("cluster gadget needs L >= 1");
    const VertexRange c{builder.add_vertices(2 * l), 2 * l};
    const VertexSet members = c.to_set();
    builder.add_clique(members);
    builder.add_join(z, std::span<const Vertex>(members.data(), static_cast<std::size_t>(l)));
    return c;
}

Graph gen_cluster_gadget(const Graph& h, const VertexSet& z, int l) {
    if (z.empty()) throw ContractViolation("cluster gadget needs a nonempty clique");
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < 0 || z[i] >= h.num_vertices()) throw ContractViolation("cluster gadget vertex out of range");
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            if (!h.adjacent(z[i], z[j])) throw ContractViolation("cluster gadget set is not a clique");
        }
    }
    GraphBuilder b(h.num_vertices());
    for (const Edge& e : h.edges()) b.add_edge(e.u, e.v);
    add_cluster_gadget(b, z, l);
    return std::move(b).build();
}

bool tcmis_is_solution(const TcmisInstance& inst, const std::vector<std::vector<int>>& h) {
    for (const auto& e : inst.edges) {
        if (e.node_a == e.node_b && e.color_a == e.color_b) continue;
        if (h[e.node_a][e.color_a - 1] == e.index_a && h[e.node_b][e.color_b - 1] == e.index_b) return false;
    }
    return true;
}

int TcmisGadget::ancestor(int x, int d) const {
    for (int i = 0; i < d && x >= 0; ++i) x = trunk_parent[x];
    return x;
}

namespace {

struct OrientedEdge {
    int upper_node, upper_color, upper_index;
    int lower_node, lower_color, lower_index;
    bool same_node;
};

}  // namespace

TcmisGadget gen_tcmis_gadget(const TcmisInstance& inst) {
    const int nt = inst.tree_nodes;
    const int k = inst.k;
    const int r = inst.r;
    if (nt < 1 || k < 1 || r < 1) throw ContractViolation("tcmis: need at least one node, colour and position");
    std::vector<TreeEdge> tree_edges(inst.tree_edges.begin(), inst.tree_edges.end());
    for (auto [a, b] : tree_edges) {
        if (a < 0 || b < 0 || a >= nt || b >= nt) throw ContractViolation("tcmis: tree edge out of range");
    }
    if (!is_tree(nt, tree_edges)) throw ContractViolation("tcmis: tree edges do not form a tree");

    // Root T at node 0.
    const auto tadj = tree_adjacency(nt, tree_edges);
    std::vector<int> tparent(static_cast<std::size_t>(nt), -1);
    std::vector<int> order{0};
    std::vector<bool> seen(static_cast<std::size_t>(nt), false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int children = 0;
        for (int y : tadj[order[i]]) {
            if (seen[y]) continue;
            seen[y] = true;
            tparent[y] = order[i];
            order.push_back(y);
            ++children;
        }
        if (children > 2) throw ContractViolation("tcmis: tree is not binary at node " + std::to_string(order[i]));
    }

    // Orient every instance edge so the upper endpoint is the parent (or the same node).
    std::vector<OrientedEdge> oriented;
    for (const auto& e : inst.edges) {
        for (auto [node, color, index] : {std::tuple{e.node_a, e.color_a, e.index_a}, std::tuple{e.node_b, e.color_b, e.index_b}}) {
            if (node < 0 || node >= nt || color < 1 || color > k || index < 1 || index > r) {
                throw ContractViolation("tcmis: edge endpoint out of range");
            }
        }
        if (e.node_a == e.node_b) {
            oriented.push_back({e.node_a, e.color_a, e.index_a, e.node_b, e.color_b, e.index_b, true});
        } else if (tparent[e.node_b] == e.node_a) {
            oriented.push_back({e.node_a, e.color_a, e.index_a, e.node_b, e.color_b, e.index_b, false});
        } else if (tparent[e.node_a] == e.node_b) {
            oriented.push_back({e.node_b, e.color_b, e.index_b, e.node_a, e.color_a, e.index_a, false});
        } else {
            throw ContractViolation("tcmis: edge joins nodes that are neither equal nor adjacent in the tree");
        }
    }

    TcmisGadget g;
    g.k = k;
    g.r = r;
    const int m = static_cast<int>(inst.edges.size());
    g.l = 36 * k + 5;
    g.n_sub = (m + 1) * r;
    g.chain_length = 2 * g.n_sub + r + 5;
    const int n_sub = g.n_sub;
    const int len = g.chain_length;
    const int l = g.l;

    // T': originals, i', r_0, then N subdivision nodes per edge.
    g.extra_node = nt;
    g.root_node = nt + 1;
    g.trunk_parent.assign(static_cast<std::size_t>(nt + 2), -1);
    auto subdivide_edge = [&](int child, int parent) {
        int below = child;
        for (int s = 0; s < n_sub; ++s) {
            g.trunk_parent.push_back(-1);
            const int node = static_cast<int>(g.trunk_parent.size()) - 1;
            g.trunk_parent[below] = node;
            below = node;
        }
        g.trunk_parent[below] = parent;
    };
    subdivide_edge(0, g.extra_node);
    subdivide_edge(g.extra_node, g.root_node);
    for (std::size_t i = 1; i < order.size(); ++i) subdivide_edge(order[i], tparent[order[i]]);
    g.trunk_nodes = static_cast<int>(g.trunk_parent.size());

    // p(x): original nodes whose path to the chain end passes through x.
    g.p.assign(static_cast<std::size_t>(g.trunk_nodes), 0);
    g.chain_end.assign(static_cast<std::size_t>(nt), -1);
    for (int i = 0; i < nt; ++i) {
        int x = i;
        for (int step = 0; step <= 2 * (n_sub + 1); ++step) {
            ++g.p[x];
            if (step < 2 * (n_sub + 1)) x = g.trunk_parent[x];
        }
        g.chain_end[i] = x;
    }

    g.check_edge.assign(static_cast<std::size_t>(g.trunk_nodes), -1);
    g.edge_node.assign(static_cast<std::size_t>(m), -1);
    for (int j = 0; j < m; ++j) {
        const int gap = 2 * (j + 1) * r;
        const int node = g.ancestor(oriented[j].upper_node, gap);
        g.edge_node[j] = node;
        if (node < 0) {
            g.overshoots.push_back("edge " + std::to_string(j + 1) + ": check node above r_0");
            continue;
        }
        if (g.check_edge[node] == -1) g.check_edge[node] = j;
        if (!oriented[j].same_node && gap > n_sub + 1) {
            g.overshoots.push_back("edge " + std::to_string(j + 1) + ": check node beyond the lower chain's reach");
        }
    }

    std::vector<int> a_size(static_cast<std::size_t>(g.trunk_nodes));
    for (int x = 0; x < g.trunk_nodes; ++x) {
        a_size[x] = l - 6 * k * g.p[x] - (g.check_edge[x] >= 0 ? 1 : 2);
        if (a_size[x] < 1) {
            throw ContractViolation("tcmis: trunk clique at node " + std::to_string(x) + " would have size " + std::to_string(a_size[x]) +
                                    " (p=" + std::to_string(g.p[x]) + ")");
        }
    }

    // Chain clique sizes.
    std::vector<std::vector<std::vector<int>>> size(static_cast<std::size_t>(nt),
                                                    std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(len), 6)));
    for (auto& per_node : size) {
        for (auto& row : per_node) {
            row.front() = l - 7;
            row.back() = l - 7;
        }
    }
    auto mark = [&](int j, int node, int color, int gamma) {
        if (gamma < 2 || gamma > len - 1) {
            g.overshoots.push_back("edge " + std::to_string(j + 1) + ": position " + std::to_string(gamma) + " outside chain (" +
                                   std::to_string(node) + "," + std::to_string(color) + ")");
            return;
        }
        size[node][color - 1][gamma - 1] = 7;
    };
    for (int j = 0; j < m; ++j) {
        const auto& e = oriented[j];
        const int gap = 2 * (j + 1) * r;
        if (e.same_node) {
            if (e.upper_color == e.lower_color) continue;
            mark(j, e.upper_node, e.upper_color, gap + 1 + e.upper_index);
            mark(j, e.lower_node, e.lower_color, gap + 1 + e.lower_index);
        } else {
            mark(j, e.upper_node, e.upper_color, gap + 1 + e.upper_index);
            mark(j, e.lower_node, e.lower_color, gap + n_sub + 2 + e.lower_index);
        }
    }

    // Vertices: trunk cliques, then chain cliques, then cluster gadgets.
    GraphBuilder b;
    g.a.resize(static_cast<std::size_t>(g.trunk_nodes));
    for (int x = 0; x < g.trunk_nodes; ++x) {
        g.a[x] = {b.add_vertices(a_size[x]), a_size[x]};
        b.add_clique(g.a[x].to_set());
    }
    for (int x = 0; x < g.trunk_nodes; ++x) {
        if (g.trunk_parent[x] >= 0) b.add_join(g.a[x].to_set(), g.a[g.trunk_parent[x]].to_set());
    }
    g.chain.assign(static_cast<std::size_t>(nt), {});
    for (int i = 0; i < nt; ++i) {
        g.chain[i].assign(static_cast<std::size_t>(k), {});
        for (int c = 0; c < k; ++c) {
            auto& cliques = g.chain[i][c];
            for (int gamma = 0; gamma < len; ++gamma) {
                const int s = size[i][c][gamma];
                cliques.push_back({b.add_vertices(s), s});
                b.add_clique(cliques.back().to_set());
                if (gamma > 0) b.add_join(cliques[gamma - 1].to_set(), cliques[gamma].to_set());
            }
            b.add_join(cliques.front().to_set(), g.a[i].to_set());
            b.add_join(cliques.back().to_set(), g.a[g.chain_end[i]].to_set());
        }
    }
    for (int x = 0; x < g.trunk_nodes; ++x) {
        const VertexSet z = g.a[x].to_set();
        g.clusters.push_back({"A:" + std::to_string(x), z, add_cluster_gadget(b, z, l)});
    }
    for (int i = 0; i < nt; ++i) {
        for (int c = 0; c < k; ++c) {
            for (int gamma = 0; gamma < len; ++gamma) {
                const VertexSet z = g.chain[i][c][gamma].to_set();
                g.clusters.push_back({"CC:" + std::to_string(i) + ":" + std::to_string(c + 1) + ":" + std::to_string(gamma + 1), z,
                                      add_cluster_gadget(b, z, l)});
            }
        }
    }
    g.h = std::move(b).build();
    g.max_degree = g.h.max_degree();
    if (g.max_degree >= 5 * k * l + 5 * l) {
        throw std::logic_error("tcmis: degree audit failed, max degree " + std::to_string(g.max_degree));
    }
    return g;
}

TcmisWitnessPartition tcmis_witness_to_partition(const TcmisGadget& g, const std::vector<std::vector<int>>& h) {
    const int nt = static_cast<int>(g.chain.size());
    if (static_cast<int>(h.size()) != nt) throw ContractViolation("tcmis witness: one row per tree node required");
    for (const auto& row : h) {
        if (static_cast<int>(row.size()) != g.k) throw ContractViolation("tcmis witness: one choice per colour required");
        for (int choice : row) {
            if (choice < 1 || choice > g.r) throw ContractViolation("tcmis witness: choice out of [1, r]");
        }
    }
    TcmisWitnessPartition out;
    TreePartition& tp = out.tp;
    tp.bags.resize(static_cast<std::size_t>(g.trunk_nodes));
    auto append = [](VertexSet& bag, const VertexRange& range) {
        for (Vertex v = range.first; v < range.end(); ++v) bag.push_back(v);
    };
    auto new_bag = [&](int parent) {
        tp.bags.emplace_back();
        const int id = tp.num_nodes() - 1;
        tp.tree_edges.emplace_back(parent, id);
        return id;
    };
    for (int x = 0; x < g.trunk_nodes; ++x) {
        append(tp.bags[x], g.a[x]);
        if (g.trunk_parent[x] >= 0) tp.tree_edges.emplace_back(g.trunk_parent[x], x);
    }

    const int len = g.chain_length;
    const int reach = 2 * (g.n_sub + 1);
    std::vector<std::vector<std::vector<int>>> home(static_cast<std::size_t>(nt));
    for (int i = 0; i < nt; ++i) {
        home[i].assign(static_cast<std::size_t>(g.k), std::vector<int>(static_cast<std::size_t>(len), -1));
        for (int c = 0; c < g.k; ++c) {
            const auto& cliques = g.chain[i][c];
            auto& where = home[i][c];
            const int chosen = h[i][c];
            // Position chosen+1+t sits on the t-th ancestor of i.
            for (int t = 0; t <= reach; ++t) {
                const int gamma = chosen + 1 + t;
                const int node = g.ancestor(i, t);
                append(tp.bags[node], cliques[gamma - 1]);
                where[gamma - 1] = node;
            }
            // Fold a run of positions into paired bags hanging off `anchor`;
            // the first bag holds the run's two ends.
            auto fold = [&](int first, int last, int anchor) {
                int parent = anchor;
                for (int lo = first, hi = last; lo <= hi; ++lo, --hi) {
                    const int bag = new_bag(parent);
                    append(tp.bags[bag], cliques[lo - 1]);
                    where[lo - 1] = bag;
                    if (hi != lo) {
                        append(tp.bags[bag], cliques[hi - 1]);
                        where[hi - 1] = bag;
                    }
                    parent = bag;
                }
            };
            fold(1, chosen, i);
            fold(chosen + reach + 2, len, g.chain_end[i]);
        }
    }

    for (const auto& cluster : g.clusters) {
        int anchor = -1;
        if (cluster.owner.starts_with("A:")) {
            anchor = std::stoi(cluster.owner.substr(2));
        } else {
            int i = 0;
            int c = 0;
            int gamma = 0;
            std::sscanf(cluster.owner.c_str(), "CC:%d:%d:%d", &i, &c, &gamma);
            anchor = home[i][c - 1][gamma - 1];
        }
        const int half = cluster.c.size / 2;
        const int first = new_bag(anchor);
        append(tp.bags[first], {cluster.c.first, half});
        const int second = new_bag(first);
        append(tp.bags[second], {cluster.c.first + half, cluster.c.size - half});
    }
    for (auto& bag : tp.bags) std::sort(bag.begin(), bag.end());
    for (int x = 0; x < g.trunk_nodes; ++x) {
        const int size = static_cast<int>(tp.bags[x].size());
        if (size > g.l) out.overflows.push_back({x, size, g.check_edge[x]});
    }
    return out;
}

DominoReduction gen_domino_reduction(const Graph& g, int k) {
    if (k < 1) throw ContractViolation("domino reduction: k must be at least 1");
    DominoReduction red;
    red.k = k;
    red.d = g.max_degree();
    if (red.d < 1) throw ContractViolation("domino reduction: graph needs at least one edge");
    red.l = k * red.d + 1;
    red.m = (k + 1) * red.l - 1;
    const int pendant = 2 * red.m - 2;
    GraphBuilder b;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const VertexRange c{b.add_vertices(red.l), red.l};
        red.clique.push_back(c);
        b.add_clique(c.to_set());
        for (Vertex w = c.first; w < c.end(); ++w) {
            const VertexRange s{b.add_vertices(pendant), pendant};
            red.pendant[w] = s;
            b.add_edge(s.first, w);
            for (Vertex x = s.first + 1; x < s.end(); ++x) b.add_edge(s.first, x);
        }
    }
    for (const Edge& e : g.edges()) {
        const Vertex z = b.add_vertices(1);
        red.z[e] = z;
        for (Vertex x = red.clique[e.u].first; x < red.clique[e.u].end(); ++x) b.add_edge(z, x);
        for (Vertex x = red.clique[e.v].first; x < red.clique[e.v].end(); ++x) b.add_edge(z, x);
    }
    red.h = std::move(b).build();
    return red;
}

TreeDecomposition tp_witness_to_domino(const Graph& g, int k, const TreePartition& tp, const DominoReduction& red) {
    const VerifyResult check = verify_tp(g, tp);
    if (!check.ok()) throw ContractViolation("tp_witness_to_domino: invalid partition: " + check.violation->describe());
    if (check.width > k) throw ContractViolation("tp_witness_to_domino: partition wider than k");
    if (red.k != k) throw ContractViolation("tp_witness_to_domino: reduction built for a different k");
    TreeDecomposition td;
    td.bags.resize(tp.bags.size());
    td.tree_edges = tp.tree_edges;
    const auto bag_of = tp.bag_of(g.num_vertices());
    for (int i = 0; i < tp.num_nodes(); ++i) {
        auto& bag = td.bags[i];
        for (Vertex v : tp.bags[i]) {
            for (Vertex x = red.clique[v].first; x < red.clique[v].end(); ++x) bag.push_back(x);
            for (Vertex u : g.neighbors(v)) bag.push_back(red.z.at(Edge(u, v)));
        }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Vertex w = red.clique[v].first; w < red.clique[v].end(); ++w) {
            const VertexRange s = red.pendant.at(w);
            const Vertex y = s.first;
            VertexSet first{w, y};
            for (int i = 1; i <= red.m - 2; ++i) first.push_back(s.first + i);
            VertexSet second{y};
            for (int i = red.m - 1; i < s.size; ++i) second.push_back(s.first + i);
            std::sort(first.begin(), first.end());
            td.bags.push_back(std::move(first));
            const int a = td.num_nodes() - 1;
            td.bags.push_back(std::move(second));
            const int b = td.num_nodes() - 1;
            td.tree_edges.emplace_back(bag_of[v], a);
            td.tree_edges.emplace_back(a, b);
        }
    }
    td.root = tp.num_nodes() > 0 ? 0 : -1;
    return td;
}

TreePartition explicit_k3m_partition(int m) {
    if (m < 0) throw ContractViolation("explicit_k3m_partition: m must be nonnegative");
    TreePartition tp;
    tp.bags.push_back({0, 1, 2});
    for (int i = 0; i < m; ++i) {
        tp.bags.push_back({3 + i});
        tp.tree_edges.emplace_back(0, i + 1);
    }
    return tp;
}

}  // namespace tpw
