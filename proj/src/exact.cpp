#include "tpw/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "tpw/errors.hpp"

namespace tpw {

namespace {

using Mask = std::uint32_t;

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> out(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Vertex u : g.neighbors(v)) out[v] |= bit(u);
    }
    return out;
}

Mask neighborhood(const std::vector<Mask>& adj, Mask set) {
    Mask out = 0;
    for (Mask s = set; s != 0; s &= s - 1) out |= adj[std::countr_zero(s)];
    return out & ~set;
}

/// Connected components of G[set], ordered by minimum vertex.
std::vector<Mask> components(const std::vector<Mask>& adj, Mask set) {
    std::vector<Mask> out;
    while (set != 0) {
        Mask comp = set & (~set + 1);
        Mask frontier = comp;
        while (frontier != 0) {
            const Mask next = neighborhood(adj, frontier) & set & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        set &= ~comp;
    }
    return out;
}

VertexSet to_set(Mask mask) {
    VertexSet out;
    for (Mask s = mask; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
}

std::uint64_t key(Mask a, Mask b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

class TpwSearch {
public:
    TpwSearch(const std::vector<Mask>& adj, int k) : adj_(adj), k_(k) {}

    /// Can G[d] be partitioned with a first bag containing `required`?
    bool feasible(Mask d, Mask required) {
        if (std::popcount(required) > k_) return false;
        const auto k = key(d, required);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second != 0;
        const Mask free = d & ~required;
        const int room = k_ - std::popcount(required);
        Mask chosen = 0;
        // Enumerate subsets of `free` (including the empty one) up to `room` extra vertices.
        for (Mask extra = free;; extra = (extra - 1) & free) {
            if (std::popcount(extra) <= room && (required | extra) != 0 && children_ok(d, required | extra)) {
                chosen = required | extra;
                break;
            }
            if (extra == 0) break;
        }
        memo_[k] = chosen;
        return chosen != 0;
    }

    /// Emits the partition found for (d, required) below `parent`.
    void build(Mask d, Mask required, int parent, TreePartition& out) {
        const Mask bag = memo_.at(key(d, required));
        out.bags.push_back(to_set(bag));
        const int self = out.num_nodes() - 1;
        if (parent >= 0) out.tree_edges.emplace_back(parent, self);
        for (Mask child : components(adj_, d & ~bag)) build(child, neighborhood(adj_, bag) & child, self, out);
    }

private:
    bool children_ok(Mask d, Mask bag) {
        const Mask rest = d & ~bag;
        const Mask boundary = neighborhood(adj_, bag);
        for (Mask child : components(adj_, rest)) {
            if (!feasible(child, boundary & child)) return false;
        }
        return true;
    }

    const std::vector<Mask>& adj_;
    int k_;
    std::unordered_map<std::uint64_t, Mask> memo_;
};

class DominoSearch {
public:
    DominoSearch(const std::vector<Mask>& adj, int k) : adj_(adj), k_(k) {}

    /// Subtree placing the vertices of `rest` below a bag that shares `carried`.
    /// The current bag is carried ∪ A with A ⊆ rest nonempty and covering
    /// N(carried) ∩ rest, since carried vertices already sit in two bags.
    bool feasible(Mask rest, Mask carried) {
        const auto k = key(rest, carried);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second != 0;
        const Mask forced = neighborhood(adj_, carried) & rest;
        const int room = k_ + 1 - std::popcount(carried | forced);
        Mask chosen = 0;
        if (room >= 0) {
            const Mask optional = rest & ~forced;
            for (Mask extra = optional;; extra = (extra - 1) & optional) {
                const Mask a = forced | extra;
                if (std::popcount(extra) <= room && a != 0 && children_ok(rest, a)) {
                    chosen = a;
                    break;
                }
                if (extra == 0) break;
            }
        }
        memo_[k] = chosen;
        return chosen != 0;
    }

    void build(Mask rest, Mask carried, int parent, TreeDecomposition& out) {
        const Mask a = memo_.at(key(rest, carried));
        out.bags.push_back(to_set(carried | a));
        const int self = out.num_nodes() - 1;
        if (parent >= 0) out.tree_edges.emplace_back(parent, self);
        for (auto [group, down] : groups(rest & ~a, a)) build(group, down, self, out);
    }

private:
    /// Components of G[remaining] merged when they share a neighbour in `a`;
    /// each group carries its neighbours in `a` down.
    std::vector<std::pair<Mask, Mask>> groups(Mask remaining, Mask a) {
        std::vector<std::pair<Mask, Mask>> out;
        for (Mask comp : components(adj_, remaining)) {
            Mask down = neighborhood(adj_, comp) & a;
            Mask merged = comp;
            for (auto it = out.begin(); it != out.end();) {
                if ((it->second & down) != 0) {
                    merged |= it->first;
                    down |= it->second;
                    it = out.erase(it);
                } else {
                    ++it;
                }
            }
            out.emplace_back(merged, down);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool children_ok(Mask rest, Mask a) {
        for (auto [group, down] : groups(rest & ~a, a)) {
            if (!feasible(group, down)) return false;
        }
        return true;
    }

    const std::vector<Mask>& adj_;
    int k_;
    std::unordered_map<std::uint64_t, Mask> memo_;
};

Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

ExactTpwResult exact_tpw(const Graph& g, int kmax, int cap) {
    const int n = g.num_vertices();
    if (n > cap || n > 31) throw CapacityError("exact_tpw: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    ExactTpwResult result;
    const auto adj = adjacency_masks(g);
    int width = 0;
    std::vector<std::pair<Mask, int>> solved;  // component, its width
    for (Mask comp : components(adj, full_mask(n))) {
        int k = std::max(1, width);
        bool found = false;
        for (; k <= kmax; ++k) {
            TpwSearch search(adj, k);
            if (search.feasible(comp, comp & (~comp + 1))) {
                found = true;
                break;
            }
        }
        if (!found) return result;
        width = std::max(width, k);
    }
    // Rebuild every component at the common width for one witness.
    if (n > 0) {
        TpwSearch search(adj, width);
        int previous = -1;
        for (Mask comp : components(adj, full_mask(n))) {
            const Mask root = comp & (~comp + 1);
            search.feasible(comp, root);
            const int first = result.witness.num_nodes();
            search.build(comp, root, -1, result.witness);
            if (previous >= 0) result.witness.tree_edges.emplace_back(previous, first);
            previous = first;
        }
    }
    result.width = width;
    return result;
}

ExactDominoResult exact_domino_tw(const Graph& g, int kmax, int cap) {
    const int n = g.num_vertices();
    if (n > cap || n > 31) throw CapacityError("exact_domino_tw: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    ExactDominoResult result;
    if (g.max_degree() > 2 * kmax) return result;
    const auto adj = adjacency_masks(g);
    const auto comps = components(adj, full_mask(n));
    for (int k = 0; k <= kmax; ++k) {
        if (g.max_degree() > 2 * k) continue;
        DominoSearch search(adj, k);
        bool ok = true;
        for (Mask comp : comps) {
            if (!search.feasible(comp, 0)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        int previous = -1;
        for (Mask comp : comps) {
            const int first = result.witness.num_nodes();
            search.build(comp, 0, -1, result.witness);
            if (previous >= 0) result.witness.tree_edges.emplace_back(previous, first);
            previous = first;
        }
        result.width = k;
        return result;
    }
    return result;
}

int brute_mu(const Graph& g, Vertex s, Vertex t) {
    const int n = g.num_vertices();
    if (n > 16) throw CapacityError("brute_mu: n exceeds 16");
    if (s == t) throw ContractViolation("brute_mu: s and t must differ");
    auto adj = adjacency_masks(g);
    adj[s] &= ~bit(t);
    adj[t] &= ~bit(s);
    const Mask others = full_mask(n) & ~bit(s) & ~bit(t);
    auto separated = [&](Mask removed) {
        const Mask allowed = full_mask(n) & ~removed;
        Mask seen = bit(s);
        Mask frontier = seen;
        while (frontier != 0) {
            const Mask next = neighborhood(adj, frontier) & allowed & ~seen;
            seen |= next;
            frontier = next;
        }
        return (seen & bit(t)) == 0;
    };
    int best = std::popcount(others);
    for (Mask sub = others;; sub = (sub - 1) & others) {
        const int size = std::popcount(sub);
        if (size < best && separated(sub)) best = size;
        if (sub == 0) break;
    }
    return best;
}

}  // namespace tpw
