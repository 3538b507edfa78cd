#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"
#include "tpw/random.hpp"

namespace oracle {

using tpw::Edge;
using tpw::Graph;
using tpw::Vertex;

inline Graph random_graph(int n, double p, tpw::Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Graph on n vertices from the bits of `code` over pairs in lexicographic order.
inline Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Smallest edge code over all vertex relabellings.
inline std::uint64_t canonical_code(int n, std::uint64_t code) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
        }
    }
    // Only relabellings that list vertices by non-increasing degree are tried.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto degree = [&](int v) { return std::popcount(adj[v]); };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return degree(a) > degree(b) || (degree(a) == degree(b) && a < b); });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && degree(perm[j]) == degree(perm[i])) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> rec = [&](std::size_t cell) {
        if (cell == cells.size()) {
            std::uint64_t out = 0;
            int b = 0;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v, ++b) {
                    if (adj[perm[u]] & (1u << perm[v])) out |= std::uint64_t{1} << b;
                }
            }
            best = std::min(best, out);
            return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            rec(cell + 1);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    rec(0);
    return best;
}

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<Graph> all_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> layer{0};
    std::set<std::uint64_t> all{0};
    for (int m = 0; m < pairs; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : layer) {
            for (int b = 0; b < pairs; ++b) {
                if ((code >> b) & 1) continue;
                next.insert(canonical_code(n, code | (std::uint64_t{1} << b)));
            }
        }
        all.insert(next.begin(), next.end());
        layer = std::move(next);
    }
    std::vector<Graph> out;
    for (std::uint64_t code : all) out.push_back(graph_from_code(n, code));
    return out;
}

/// Calls f(part_of, parts) for every set partition with parts of size at most k
/// whose quotient graph is a forest (so some tree over the parts is a valid
/// tree-partition). Stops early when f returns false.
inline void for_each_tree_partition(const Graph& g, int k, const std::function<bool(const std::vector<int>&, int)>& f) {
    const int n = g.num_vertices();
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    std::vector<int> size(static_cast<std::size_t>(n) + 1, 0);
    bool stop = false;
    auto forest = [&](int parts) {
        std::vector<int> uf(static_cast<std::size_t>(parts));
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
        std::set<std::pair<int, int>> seen;
        for (const Edge& e : g.edges()) {
            int a = part[e.u];
            int b = part[e.v];
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second) continue;
            if (find(a) == find(b)) return false;
            uf[find(a)] = find(b);
        }
        return true;
    };
    std::function<void(int, int)> rec = [&](int v, int parts) {
        if (stop) return;
        if (v == n) {
            if (forest(parts) && !f(part, parts)) stop = true;
            return;
        }
        for (int p = 0; p <= parts && p < n; ++p) {
            if (size[p] >= k) continue;
            part[v] = p;
            ++size[p];
            rec(v + 1, std::max(parts, p + 1));
            --size[p];
        }
        part[v] = -1;
    };
    rec(0, 0);
}

/// Tree-partition-width by exhaustive set-partition enumeration.
inline int brute_tpw(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k) {
        bool found = false;
        for_each_tree_partition(g, k, [&](const std::vector<int>&, int) {
            found = true;
            return false;
        });
        if (found) return k;
    }
}

/// Converts a partition into a TreePartition by joining the quotient forest's
/// components with extra tree edges.
inline tpw::TreePartition to_tree_partition(const Graph& g, const std::vector<int>& part, int parts) {
    tpw::TreePartition tp;
    tp.bags.resize(static_cast<std::size_t>(parts));
    for (Vertex v = 0; v < g.num_vertices(); ++v) tp.bags[part[v]].push_back(v);
    std::vector<int> uf(static_cast<std::size_t>(parts));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (const Edge& e : g.edges()) {
        const int a = find(part[e.u]);
        const int b = find(part[e.v]);
        if (a == b) continue;
        uf[a] = b;
        tp.tree_edges.emplace_back(part[e.u], part[e.v]);
    }
    for (int p = 1; p < parts; ++p) {
        if (find(p) != find(0)) {
            tp.tree_edges.emplace_back(0, p);
            uf[find(p)] = find(0);
        }
    }
    return tp;
}

/// Maximum number of internally disjoint s-t paths in G - st, by packing
/// the interior vertex sets of all simple paths.
inline int menger_paths(const Graph& g, Vertex s, Vertex t) {
    const int n = g.num_vertices();
    std::vector<std::uint32_t> interiors;
    std::uint32_t on_path = 1u << s;
    std::function<void(Vertex)> walk = [&](Vertex x) {
        for (Vertex y : g.neighbors(x)) {
            if (y == t) {
                if (x != s) interiors.push_back(on_path & ~(1u << s));
                continue;
            }
            if (on_path & (1u << y)) continue;
            on_path |= 1u << y;
            walk(y);
            on_path &= ~(1u << y);
        }
    };
    walk(s);
    // Keep inclusion-minimal interiors only; a superset never helps a packing.
    std::sort(interiors.begin(), interiors.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
    });
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t m : interiors) {
        bool dominated = false;
        for (std::uint32_t q : minimal) dominated = dominated || (q & m) == q;
        if (!dominated) minimal.push_back(m);
    }
    int best = 0;
    std::function<void(std::size_t, std::uint32_t, int)> pack = [&](std::size_t i, std::uint32_t used, int count) {
        best = std::max(best, count);
        // Each further path needs at least one unused interior vertex.
        if (count + (n - 2 - std::popcount(used)) <= best) return;
        for (std::size_t j = i; j < minimal.size(); ++j) {
            if (minimal[j] & used) continue;
            pack(j + 1, used | minimal[j], count + 1);
        }
    };
    pack(0, 0, 0);
    return best;
}

/// Treewidth by trying every elimination order (n <= 8).
inline int brute_treewidth(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return -1;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n - 1;
    do {
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
        for (const Edge& e : g.edges()) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
        }
        std::uint32_t gone = 0;
        int width = 0;
        for (int v : order) {
            const std::uint32_t nb = adj[v] & ~gone;
            width = std::max(width, std::popcount(nb));
            for (std::uint32_t a = nb; a; a &= a - 1) adj[std::countr_zero(a)] |= nb & ~(1u << std::countr_zero(a));
            gone |= 1u << v;
            if (width >= best) break;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Number of vertices of w in the largest component of G minus `removed`.
inline int max_component_share(const Graph& g, const tpw::VertexSet& removed, const tpw::VertexSet& w) {
    const int n = g.num_vertices();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (Vertex v : removed) label[v] = -2;
    std::vector<int> count;
    for (Vertex v = 0; v < n; ++v) {
        if (label[v] != -1) continue;
        const int id = static_cast<int>(count.size());
        count.push_back(0);
        std::vector<Vertex> stack{v};
        label[v] = id;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (label[y] == -1) {
                    label[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    for (Vertex x : w) {
        if (label[x] >= 0) ++count[label[x]];
    }
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

}  // namespace oracle
