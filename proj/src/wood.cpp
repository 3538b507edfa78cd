#include "tpw/wood.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "tpw/errors.hpp"

namespace tpw {

int WoodConstants::window_low(int w) {
    return static_cast<int>(std::ceil((gamma + 1.0) * (w + 1)));
}

long WoodConstants::window_high(int w, int delta) {
    return static_cast<long>(std::floor(3.0 * (gamma + 1.0) * (w + 1) * delta));
}

double WoodConstants::bound(int w, int delta) {
    return gamma * (w + 1) * (3.0 * gamma * delta - 1.0);
}

int balanced_separator_bag(const BalancedDecomposition& bal, const VertexSet& w) {
    int x = bal.root();
    if (x < 0) throw ContractViolation("balanced_separator_bag: empty decomposition");
    const long total = static_cast<long>(w.size());
    for (;;) {
        const auto& bag = bal.td.bags[x];
        int heavy = -1;
        long heavy_count = 0;
        for (int c : bal.children[x]) {
            long count = 0;
            for (Vertex v : w) {
                if (!std::binary_search(bag.begin(), bag.end(), v) && bal.in_subtree(c, v)) ++count;
            }
            if (count > heavy_count) {
                heavy = c;
                heavy_count = count;
            }
        }
        if (heavy == -1 || 2 * heavy_count <= total) return x;
        x = heavy;
    }
}

namespace {

class WoodBuilder {
public:
    WoodBuilder(const Graph& g, const BalancedDecomposition& bal)
        : g_(g),
          bal_(bal),
          w_(std::max(0, bal.td.width())),
          low_(WoodConstants::window_low(w_)),
          high_(WoodConstants::window_high(w_, std::max(1, g.max_degree()))),
          in_d_(static_cast<std::size_t>(g.num_vertices()), 0),
          in_r_(static_cast<std::size_t>(g.num_vertices()), 0),
          seen_(static_cast<std::size_t>(g.num_vertices()), 0) {}

    int add_bag(VertexSet bag, int parent) {
        tp_.bags.push_back(std::move(bag));
        const int id = tp_.num_nodes() - 1;
        if (parent >= 0) tp_.tree_edges.emplace_back(parent, id);
        return id;
    }

    /// Partitions G[d] below `parent` with a first bag containing s.
    void schedule(VertexSet d, VertexSet s, int parent) { tasks_.push_back({std::move(d), std::move(s), parent}); }

    void run() {
        while (!tasks_.empty()) {
            Task task = std::move(tasks_.front());
            tasks_.pop_front();
            process(task);
        }
    }

    TreePartition take() { return std::move(tp_); }

private:
    struct Task {
        VertexSet d;
        VertexSet s;
        int parent;
    };

    struct Piece {
        VertexSet d;
        VertexSet s;
    };

    void process(const Task& task) {
        const auto& d = task.d;
        if (d.empty()) return;
        if (d.size() <= task.s.size() + static_cast<std::size_t>(w_) + 1) {
            add_bag(d, task.parent);
            return;
        }
        const VertexSet& target = task.s.empty() ? d : task.s;
        const int x = balanced_separator_bag(bal_, target);
        ++stamp_;
        for (Vertex v : d) in_d_[v] = stamp_;
        VertexSet r = task.s;
        for (Vertex v : bal_.td.bags[x]) {
            if (in_d_[v] == stamp_) r.push_back(v);
        }
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        if (r.empty()) r.push_back(d.front());
        for (Vertex v : r) in_r_[v] = stamp_;
        const int self = add_bag(r, task.parent);

        std::vector<Piece> pieces;
        for (Vertex start : d) {
            if (in_r_[start] == stamp_ || seen_[start] == stamp_) continue;
            Piece piece;
            std::vector<Vertex> queue{start};
            seen_[start] = stamp_;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                const Vertex u = queue[i];
                bool boundary = false;
                for (Vertex y : g_.neighbors(u)) {
                    if (in_d_[y] != stamp_) continue;
                    if (in_r_[y] == stamp_) {
                        boundary = true;
                    } else if (seen_[y] != stamp_) {
                        seen_[y] = stamp_;
                        queue.push_back(y);
                    }
                }
                if (boundary) piece.s.push_back(u);
            }
            std::sort(queue.begin(), queue.end());
            std::sort(piece.s.begin(), piece.s.end());
            piece.d = std::move(queue);
            pieces.push_back(std::move(piece));
        }

        // Large boundaries go alone; small ones share a child bag while the
        // combined boundary stays within the upper window.
        std::vector<Piece> small;
        for (auto& piece : pieces) {
            if (static_cast<int>(piece.s.size()) >= low_) {
                schedule(std::move(piece.d), std::move(piece.s), self);
            } else {
                small.push_back(std::move(piece));
            }
        }
        std::stable_sort(small.begin(), small.end(), [](const Piece& a, const Piece& b) {
            if (a.s.size() != b.s.size()) return a.s.size() > b.s.size();
            return a.d.front() < b.d.front();
        });
        Piece group;
        for (auto& piece : small) {
            if (!group.d.empty() && static_cast<long>(group.s.size() + piece.s.size()) > high_) {
                schedule(std::move(group.d), std::move(group.s), self);
                group = Piece{};
            }
            group.d = set_union(group.d, piece.d);
            group.s = set_union(group.s, piece.s);
        }
        if (!group.d.empty()) schedule(std::move(group.d), std::move(group.s), self);
    }

    const Graph& g_;
    const BalancedDecomposition& bal_;
    int w_;
    int low_;
    long high_;
    std::vector<int> in_d_;
    std::vector<int> in_r_;
    std::vector<int> seen_;
    int stamp_ = 0;
    std::deque<Task> tasks_;
    TreePartition tp_;
};

VertexSet all_vertices(const Graph& g) {
    VertexSet out(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) out[v] = v;
    return out;
}

void check_vertices(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) {
        if (v < 0 || v >= g.num_vertices()) throw ContractViolation("vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

TreePartition partition_rooted(const Graph& g, const BalancedDecomposition& bal, const VertexSet& s) {
    check_vertices(g, s);
    if (g.num_vertices() == 0) return {};
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    WoodBuilder builder(g, bal);
    builder.schedule(all_vertices(g), std::move(sorted), -1);
    builder.run();
    return builder.take();
}

TreePartition partition_rooted(const Graph& g, const TreeDecomposition& td, const VertexSet& s) {
    return partition_rooted(g, index_td(g.num_vertices(), td), s);
}

TreePartition partition_isolated(const Graph& g, const BalancedDecomposition& bal, Vertex v) {
    check_vertices(g, {v});
    const int w = std::max(0, bal.td.width());
    WoodBuilder builder(g, bal);
    const int root = builder.add_bag({v}, -1);
    if (g.num_vertices() <= WoodConstants::window_low(w) + 1) {
        VertexSet rest;
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            if (u != v) rest.push_back(u);
        }
        if (!rest.empty()) builder.add_bag(std::move(rest), root);
        return builder.take();
    }
    // Components of G - v, each rooted at its neighbours of v.
    std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
    label[v] = 0;
    for (Vertex start = 0; start < g.num_vertices(); ++start) {
        if (label[start] != -1) continue;
        VertexSet d{start};
        label[start] = 1;
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (Vertex y : g.neighbors(d[i])) {
                if (label[y] == -1) {
                    label[y] = 1;
                    d.push_back(y);
                }
            }
        }
        std::sort(d.begin(), d.end());
        VertexSet s;
        for (Vertex u : d) {
            if (g.adjacent(u, v)) s.push_back(u);
        }
        builder.schedule(std::move(d), std::move(s), root);
    }
    builder.run();
    return builder.take();
}

TreePartition partition_isolated(const Graph& g, const TreeDecomposition& td, Vertex v) {
    return partition_isolated(g, index_td(g.num_vertices(), td), v);
}

TreePartition combine_blocks(const Graph& h, const BlockForest& bf, const std::vector<TreePartition>& per_block) {
    if (static_cast<int>(per_block.size()) != bf.num_blocks()) throw ContractViolation("combine_blocks: one partition per block required");
    TreePartition out;
    std::vector<int> owner(static_cast<std::size_t>(h.num_vertices()), -1);
    int previous_root = -1;
    for (int b = 0; b < bf.num_blocks(); ++b) {
        const TreePartition& part = per_block[b];
        const Vertex cut = bf.parent_cutvertex[b];
        int dropped = -1;
        if (cut >= 0) {
            for (int i = 0; i < part.num_nodes(); ++i) {
                if (std::find(part.bags[i].begin(), part.bags[i].end(), cut) != part.bags[i].end()) {
                    if (part.bags[i].size() != 1) {
                        throw ContractViolation("combine_blocks: block " + std::to_string(b) + " does not isolate cutvertex " +
                                                std::to_string(cut));
                    }
                    dropped = i;
                }
            }
            if (dropped == -1 || owner[cut] == -1) {
                throw ContractViolation("combine_blocks: cutvertex " + std::to_string(cut) + " missing from block " + std::to_string(b));
            }
        }
        std::vector<int> id(static_cast<std::size_t>(part.num_nodes()), -1);
        for (int i = 0; i < part.num_nodes(); ++i) {
            if (i == dropped) {
                id[i] = owner[cut];
                continue;
            }
            id[i] = out.num_nodes();
            out.bags.push_back(part.bags[i]);
            for (Vertex v : part.bags[i]) owner[v] = id[i];
        }
        for (auto [a, c] : part.tree_edges) out.tree_edges.emplace_back(id[a], id[c]);
        if (cut < 0 && part.num_nodes() > 0) {
            if (previous_root >= 0) out.tree_edges.emplace_back(previous_root, id[0]);
            previous_root = id[0];
        }
    }
    return out;
}

TreePartition expand(const TreePartition& tp_h, const BReduction& red) {
    TreePartition out;
    out.tree_edges = tp_h.tree_edges;
    out.bags.reserve(tp_h.bags.size());
    for (const auto& bag : tp_h.bags) {
        VertexSet members;
        for (Vertex p : bag) members.insert(members.end(), red.parts[p].begin(), red.parts[p].end());
        std::sort(members.begin(), members.end());
        out.bags.push_back(std::move(members));
    }
    return out;
}

}  // namespace tpw
