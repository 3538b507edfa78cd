#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace tpw {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable after construction. Use GraphBuilder or Graph::from_edges to
/// create one; both reject self-loops and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {}

    /// Builds a graph from an edge list. Duplicate edges are merged.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }
    int num_edges() const { return num_edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Checks symmetry, sortedness, and absence of loops and duplicates.
    bool is_consistent() const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    std::vector<std::vector<Vertex>> adjacency_;
    int num_edges_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : adjacency_(static_cast<std::size_t>(n)) {}

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }

    /// Appends `count` fresh vertices and returns the id of the first one.
    Vertex add_vertices(int count);
    void add_edge(Vertex u, Vertex v);
    void add_clique(std::span<const Vertex> vertices);
    /// Joins every vertex of `a` to every vertex of `b`.
    void add_join(std::span<const Vertex> a, std::span<const Vertex> b);

    Graph build() &&;
    Graph build() const&;

private:
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Contiguous range of vertex ids [first, first + size).
struct VertexRange {
    Vertex first = 0;
    int size = 0;

    Vertex end() const { return first + size; }
    bool contains(Vertex v) const { return v >= first && v < first + size; }
    VertexSet to_set() const;
};

/// Connected components ordered by their minimum vertex; each set sorted.
std::vector<VertexSet> connected_components(const Graph& g);

/// Component index per vertex, numbered as in connected_components.
std::vector<int> component_labels(const Graph& g);

/// Blocks (2-connected components, bridges, and isolated vertices) rooted per
/// connected component.
///
/// Blocks are numbered in breadth-first order of the block-cut tree, so a
/// parent block always has a smaller index than its children. The root block
/// of each connected component contains the component's minimum vertex.
struct BlockForest {
    std::vector<VertexSet> blocks;
    VertexSet cutvertices;
    /// Cutvertex shared with the parent block, or -1 for a root block.
    std::vector<Vertex> parent_cutvertex;
    /// Parent block index, or -1 for a root block.
    std::vector<int> parent_block;
    std::vector<int> roots;

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    bool is_cutvertex(Vertex v) const;
};

BlockForest biconnected_components(const Graph& g);

/// Subdivision path for each subdivided edge, listed from edge.u towards edge.v.
using SubdivisionMap = std::map<Edge, std::vector<Vertex>>;

struct Subdivision {
    Graph graph;
    SubdivisionMap paths;
};

/// Replaces each edge e by a path with counts[e] internal vertices. New
/// vertices are numbered from n upwards in edge order.
Subdivision subdivide(const Graph& g, const std::map<Edge, int>& counts);

struct Quotient {
    Graph graph;
    std::vector<int> part_of;
};

/// Contracts each part to a single vertex; loops and parallel edges are dropped.
Graph quotient(const Graph& g, std::span<const int> part_of, int num_parts);
Quotient quotient(const Graph& g, const std::vector<VertexSet>& parts);

struct InducedSubgraph {
    Graph graph;
    /// Local id -> original id (sorted ascending).
    std::vector<Vertex> to_global;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Union of two sorted vertex sets.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& set, Vertex v);

}  // namespace tpw
