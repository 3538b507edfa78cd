#include "tpw/separator.hpp"

#include <algorithm>
#include <thread>

#include "tpw/errors.hpp"

namespace tpw {

SeparatorEngine::SeparatorEngine(const Graph& g)
    : num_vertices_(g.num_vertices()),
      arcs_(2 * static_cast<std::size_t>(g.num_vertices())),
      seen_(arcs_.size(), 0),
      via_(arcs_.size()) {
    for (Vertex v = 0; v < num_vertices_; ++v) add_arc(2 * v, 2 * v + 1, -1, -1);
    for (Vertex u = 0; u < num_vertices_; ++u) {
        for (Vertex v : g.neighbors(u)) add_arc(2 * u + 1, 2 * v, std::min(u, v), std::max(u, v));
    }
}

void SeparatorEngine::add_arc(int from, int to, Vertex u, Vertex v) {
    const int forward = static_cast<int>(arcs_[from].size());
    const int backward = static_cast<int>(arcs_[to].size());
    arcs_[from].push_back({to, backward, 1, 1, u, v});
    arcs_[to].push_back({from, forward, 0, 0, u, v});
}

bool SeparatorEngine::augment(int source, int sink, Vertex s, Vertex t) {
    const Vertex a = std::min(s, t);
    const Vertex b = std::max(s, t);
    ++stamp_;
    std::vector<int> queue{source};
    seen_[source] = stamp_;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        for (int j = 0; j < static_cast<int>(arcs_[x].size()); ++j) {
            const Arc& arc = arcs_[x][j];
            if (arc.cap == 0 || seen_[arc.to] == stamp_) continue;
            if (kSeparatorIgnoresEdge && arc.u == a && arc.v == b) continue;
            seen_[arc.to] = stamp_;
            via_[arc.to] = {x, j};
            if (arc.to == sink) {
                for (int y = sink; y != source;) {
                    auto [from, idx] = via_[y];
                    Arc& used = arcs_[from][idx];
                    --used.cap;
                    ++arcs_[used.to][used.rev].cap;
                    touched_.emplace_back(from, idx);
                    y = from;
                }
                return true;
            }
            queue.push_back(arc.to);
        }
    }
    return false;
}

int SeparatorEngine::mu(Vertex s, Vertex t, int cap) {
    if (s == t) throw ContractViolation("mu: s and t must differ");
    if (s < 0 || t < 0 || s >= num_vertices_ || t >= num_vertices_) throw ContractViolation("mu: vertex out of range");
    if (cap <= 0) return 0;
    int flow = 0;
    while (flow < cap && augment(2 * s + 1, 2 * t, s, t)) ++flow;
    for (auto [from, idx] : touched_) {
        Arc& arc = arcs_[from][idx];
        arc.cap = arc.base;
        arcs_[arc.to][arc.rev].cap = arcs_[arc.to][arc.rev].base;
    }
    touched_.clear();
    return flow;
}

int mu(const Graph& g, Vertex s, Vertex t, int cap) {
    SeparatorEngine engine(g);
    return engine.mu(s, t, cap);
}

std::vector<VertexPair> candidate_pairs(const TreeDecomposition& td) {
    std::vector<VertexPair> out;
    for (const auto& bag : td.bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) {
            for (std::size_t j = i + 1; j < bag.size(); ++j) out.emplace_back(std::min(bag[i], bag[j]), std::max(bag[i], bag[j]));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexPair> all_pairs(int n) {
    std::vector<VertexPair> out;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
    }
    return out;
}

Graph build_gb(const Graph& g, int b, const std::vector<VertexPair>& pairs, int threads) {
    if (b < 1) throw ContractViolation("build_gb: b must be at least 1");
    std::vector<char> keep(pairs.size(), 0);
    auto work = [&](std::size_t begin, std::size_t end) {
        SeparatorEngine engine(g);
        for (std::size_t i = begin; i < end; ++i) {
            auto [u, v] = pairs[i];
            keep[i] = engine.mu(u, v, b) >= b;
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, pairs.size() / 64 + 1));
    if (workers == 1) {
        work(0, pairs.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (pairs.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(pairs.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (keep[i]) edges.emplace_back(pairs[i].first, pairs[i].second);
    }
    return Graph::from_edges(g.num_vertices(), edges);
}

BReduction b_reduction(const Graph& g, const Graph& gb) {
    if (gb.num_vertices() != g.num_vertices()) throw ContractViolation("b_reduction: vertex sets differ");
    BReduction red;
    red.parts = connected_components(gb);
    red.part_of = component_labels(gb);
    red.weight.reserve(red.parts.size());
    for (const auto& part : red.parts) red.weight.push_back(static_cast<int>(part.size()));
    red.h = quotient(g, red.part_of, static_cast<int>(red.parts.size()));
    return red;
}

TreeDecomposition transport_td(const TreeDecomposition& td, const BReduction& red) {
    TreeDecomposition out;
    out.tree_edges = td.tree_edges;
    out.root = td.root;
    out.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) {
        VertexSet mapped;
        mapped.reserve(bag.size());
        for (Vertex v : bag) mapped.push_back(red.part_of[v]);
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        out.bags.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace tpw
