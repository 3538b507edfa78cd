#include "tpw/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace tpw {

namespace {

void check_vertex(Vertex v, int n) {
    if (v < 0 || v >= n) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
    }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder builder(n);
    for (const Edge& e : edges) builder.add_edge(e.u, e.v);
    return std::move(builder).build();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    GraphBuilder builder(n);
    for (auto [u, v] : edges) builder.add_edge(u, v);
    return std::move(builder).build();
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(num_edges_));
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_consistent() const {
    const int n = num_vertices();
    long long half_edges = 0;
    for (Vertex u = 0; u < n; ++u) {
        const auto& adj = adjacency_[static_cast<std::size_t>(u)];
        for (std::size_t i = 0; i < adj.size(); ++i) {
            const Vertex v = adj[i];
            if (v < 0 || v >= n || v == u) return false;
            if (i > 0 && adj[i - 1] >= v) return false;
            if (!adjacent(v, u)) return false;
        }
        half_edges += static_cast<long long>(adj.size());
    }
    return half_edges == 2LL * num_edges_;
}

Vertex GraphBuilder::add_vertices(int count) {
    const Vertex first = num_vertices();
    adjacency_.resize(adjacency_.size() + static_cast<std::size_t>(count));
    return first;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    check_vertex(u, num_vertices());
    check_vertex(v, num_vertices());
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
}

void GraphBuilder::add_clique(std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
    }
}

void GraphBuilder::add_join(std::span<const Vertex> a, std::span<const Vertex> b) {
    for (Vertex u : a) {
        for (Vertex v : b) add_edge(u, v);
    }
}

Graph GraphBuilder::build() && {
    Graph g;
    g.adjacency_ = std::move(adjacency_);
    long long half_edges = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        half_edges += static_cast<long long>(adj.size());
    }
    g.num_edges_ = static_cast<int>(half_edges / 2);
    return g;
}

Graph GraphBuilder::build() const& {
    GraphBuilder copy = *this;
    return std::move(copy).build();
}

VertexSet VertexRange::to_set() const {
    VertexSet out(static_cast<std::size_t>(size));
    std::iota(out.begin(), out.end(), first);
    return out;
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.neighbors(u)) {
                if (label[v] == -1) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const auto label = component_labels(g);
    const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<VertexSet> out(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.num_vertices(); ++v) out[label[v]].push_back(v);
    return out;
}

bool BlockForest::is_cutvertex(Vertex v) const {
    return std::binary_search(cutvertices.begin(), cutvertices.end(), v);
}

BlockForest biconnected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> raw_blocks;
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    // Iterative Hopcroft-Tarjan; blocks are emitted as edge sets popped from the stack.
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            raw_blocks.push_back({root});
            continue;
        }
        std::vector<Frame> frames{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto adj = g.neighbors(f.v);
            if (f.next < adj.size()) {
                const Vertex w = adj[f.next++];
                if (disc[w] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            const Vertex parent = f.parent;
            frames.pop_back();
            if (parent == -1) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                VertexSet block;
                const Edge tree_edge(parent, v);
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.u);
                    block.push_back(e.v);
                    if (e == tree_edge) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                raw_blocks.push_back(std::move(block));
            }
        }
    }

    std::sort(raw_blocks.begin(), raw_blocks.end());

    std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(n));
    for (int b = 0; b < static_cast<int>(raw_blocks.size()); ++b) {
        for (Vertex v : raw_blocks[b]) blocks_of[v].push_back(b);
    }

    BlockForest forest;
    for (Vertex v = 0; v < n; ++v) {
        if (blocks_of[v].size() > 1) forest.cutvertices.push_back(v);
    }

    // Root each component at the lexicographically first block holding its
    // minimum vertex, then number blocks breadth-first.
    const auto label = component_labels(g);
    std::vector<int> new_index(raw_blocks.size(), -1);
    std::vector<int> order;
    std::vector<Vertex> parent_cut;
    std::vector<int> parent_blk;
    std::vector<char> seen_component(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (seen_component[label[v]]) continue;
        seen_component[label[v]] = 1;
        const int root_block = blocks_of[v].front();
        std::queue<int> queue;
        new_index[root_block] = static_cast<int>(order.size());
        order.push_back(root_block);
        parent_cut.push_back(-1);
        parent_blk.push_back(-1);
        forest.roots.push_back(new_index[root_block]);
        queue.push(root_block);
        while (!queue.empty()) {
            const int b = queue.front();
            queue.pop();
            for (Vertex c : raw_blocks[b]) {
                if (blocks_of[c].size() < 2) continue;
                for (int child : blocks_of[c]) {
                    if (new_index[child] != -1) continue;
                    new_index[child] = static_cast<int>(order.size());
                    order.push_back(child);
                    parent_cut.push_back(c);
                    parent_blk.push_back(new_index[b]);
                    queue.push(child);
                }
            }
        }
    }

    forest.blocks.reserve(order.size());
    for (int b : order) forest.blocks.push_back(raw_blocks[b]);
    forest.parent_cutvertex = std::move(parent_cut);
    forest.parent_block = std::move(parent_blk);
    return forest;
}

Subdivision subdivide(const Graph& g, const std::map<Edge, int>& counts) {
    int extra = 0;
    for (const auto& [e, c] : counts) {
        if (c < 0) throw std::invalid_argument("negative subdivision count");
        if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("subdivision count on a non-edge");
        extra += c;
    }
    GraphBuilder builder(g.num_vertices() + extra);
    Subdivision out;
    Vertex next = g.num_vertices();
    for (const Edge& e : g.edges()) {
        const auto it = counts.find(e);
        const int c = it == counts.end() ? 0 : it->second;
        if (c == 0) {
            builder.add_edge(e.u, e.v);
            continue;
        }
        std::vector<Vertex> path(static_cast<std::size_t>(c));
        std::iota(path.begin(), path.end(), next);
        next += c;
        Vertex prev = e.u;
        for (Vertex x : path) {
            builder.add_edge(prev, x);
            prev = x;
        }
        builder.add_edge(prev, e.v);
        out.paths.emplace(e, std::move(path));
    }
    out.graph = std::move(builder).build();
    return out;
}

Graph quotient(const Graph& g, std::span<const int> part_of, int num_parts) {
    if (static_cast<int>(part_of.size()) != g.num_vertices()) {
        throw std::invalid_argument("part map size differs from vertex count");
    }
    GraphBuilder builder(num_parts);
    for (const Edge& e : g.edges()) {
        const int a = part_of[e.u];
        const int b = part_of[e.v];
        if (a < 0 || a >= num_parts || b < 0 || b >= num_parts) throw std::out_of_range("part id out of range");
        if (a != b) builder.add_edge(a, b);
    }
    return std::move(builder).build();
}

Quotient quotient(const Graph& g, const std::vector<VertexSet>& parts) {
    const int n = g.num_vertices();
    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
        for (Vertex v : parts[p]) {
            check_vertex(v, n);
            if (part_of[v] != -1) throw std::invalid_argument("vertex " + std::to_string(v) + " in two parts");
            part_of[v] = p;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (part_of[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " in no part");
    }
    Graph h = quotient(g, part_of, static_cast<int>(parts.size()));
    return {std::move(h), std::move(part_of)};
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph out;
    out.to_global.assign(vertices.begin(), vertices.end());
    std::sort(out.to_global.begin(), out.to_global.end());
    out.to_global.erase(std::unique(out.to_global.begin(), out.to_global.end()), out.to_global.end());
    const int k = static_cast<int>(out.to_global.size());
    GraphBuilder builder(k);
    for (int i = 0; i < k; ++i) {
        const Vertex u = out.to_global[i];
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            const auto it = std::lower_bound(out.to_global.begin(), out.to_global.end(), v);
            if (it != out.to_global.end() && *it == v) builder.add_edge(i, static_cast<int>(it - out.to_global.begin()));
        }
    }
    out.graph = std::move(builder).build();
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const VertexSet& set, Vertex v) {
    return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace tpw
