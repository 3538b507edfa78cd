#include "tpw/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

#include "tpw/errors.hpp"

namespace tpw {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next non-comment, non-blank line split into tokens.
    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::istringstream tokens(line);
            std::vector<std::string> out;
            for (std::string t; tokens >> t;) out.push_back(std::move(t));
            if (out.empty() || out[0] == "c") continue;
            return out;
        }
        ++line_;
        return std::nullopt;
    }

    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& reason) const { throw ParseError(line_, reason); }

    int integer(const std::string& token, int lo, int hi, const char* what) const {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) fail(std::string("expected integer for ") + what + ", got '" + token + "'");
        if (value < lo || value > hi) {
            fail(std::string(what) + " " + token + " out of range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
        }
        return value;
    }

private:
    std::istream& in_;
    int line_ = 0;
};

constexpr int kMaxCount = 100'000'000;

struct BagsAndEdges {
    std::vector<VertexSet> bags;
    std::vector<TreeEdge> edges;
};

/// Reads `b <id> <v...>` lines followed by tree-edge lines until EOF.
BagsAndEdges read_bags(LineReader& reader, int num_bags, int n, bool allow_empty) {
    BagsAndEdges out;
    out.bags.resize(static_cast<std::size_t>(num_bags));
    std::vector<bool> seen(static_cast<std::size_t>(num_bags), false);
    int bag_lines = 0;
    std::set<TreeEdge> edge_set;
    while (auto tokens = reader.next()) {
        const auto& t = *tokens;
        if (t[0] == "b") {
            if (!out.edges.empty()) reader.fail("bag line after tree edges");
            if (t.size() < 2) reader.fail("bag line without id");
            const int id = reader.integer(t[1], 1, std::max(1, num_bags), "bag id");
            if (id > num_bags) reader.fail("bag id beyond declared count");
            if (seen[id - 1]) reader.fail("duplicate bag id " + t[1]);
            seen[id - 1] = true;
            VertexSet bag;
            for (std::size_t i = 2; i < t.size(); ++i) bag.push_back(reader.integer(t[i], 1, std::max(1, n), "vertex") - 1);
            if (n == 0 && t.size() > 2) reader.fail("vertex in a graph with no vertices");
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) reader.fail("duplicate vertex in bag");
            if (bag.empty() && !allow_empty) reader.fail("empty bag");
            out.bags[id - 1] = std::move(bag);
            ++bag_lines;
        } else {
            if (t.size() != 2) reader.fail("expected tree edge '<i> <j>'");
            if (bag_lines != num_bags) reader.fail("tree edge before all bags were listed");
            const int a = reader.integer(t[0], 1, std::max(1, num_bags), "bag id") - 1;
            const int b = reader.integer(t[1], 1, std::max(1, num_bags), "bag id") - 1;
            if (a == b) reader.fail("tree edge is a loop");
            if (!edge_set.emplace(std::min(a, b), std::max(a, b)).second) reader.fail("duplicate tree edge");
            out.edges.emplace_back(a, b);
        }
    }
    if (bag_lines != num_bags) reader.fail("expected " + std::to_string(num_bags) + " bags, found " + std::to_string(bag_lines));
    return out;
}

void emit_bags(std::ostream& out, const std::vector<VertexSet>& bags, const std::vector<TreeEdge>& edges) {
    for (std::size_t i = 0; i < bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : edges) out << a + 1 << ' ' << b + 1 << '\n';
}

std::vector<std::string> header(LineReader& reader, const std::string& kind, std::size_t size) {
    auto tokens = reader.next();
    if (!tokens) reader.fail("missing header");
    if ((*tokens)[0] != "s" || tokens->size() != size || (*tokens)[1] != kind) reader.fail("expected header 's " + kind + " ...'");
    return *tokens;
}

int max_bag(const std::vector<VertexSet>& bags) {
    std::size_t best = 0;
    for (const auto& bag : bags) best = std::max(best, bag.size());
    return static_cast<int>(best);
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph parse_gr(std::istream& in) {
    LineReader reader(in);
    auto head = reader.next();
    if (!head) reader.fail("missing header");
    const auto& h = *head;
    if (h.size() != 4 || h[0] != "p" || (h[1] != "tp" && h[1] != "tw")) reader.fail("expected header 'p tp <n> <m>'");
    const int n = reader.integer(h[2], 0, kMaxCount, "vertex count");
    const int m = reader.integer(h[3], 0, kMaxCount, "edge count");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (int i = 0; i < m; ++i) {
        auto tokens = reader.next();
        if (!tokens) reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        if (tokens->size() != 2) reader.fail("expected edge '<u> <v>'");
        const int u = reader.integer((*tokens)[0], 1, std::max(1, n), "vertex") - 1;
        const int v = reader.integer((*tokens)[1], 1, std::max(1, n), "vertex") - 1;
        if (n == 0) reader.fail("edge in a graph with no vertices");
        if (u == v) reader.fail("self-loop");
        if (!seen.emplace(u, v).second) reader.fail("duplicate edge");
        edges.emplace_back(u, v);
    }
    if (reader.next()) reader.fail("more edge lines than declared");
    return Graph::from_edges(n, edges);
}

void emit_gr(std::ostream& out, const Graph& g) {
    out << "p tp " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

TdFile parse_td(std::istream& in) {
    LineReader reader(in);
    const auto h = header(reader, "td", 5);
    const int bags = reader.integer(h[2], 0, kMaxCount, "bag count");
    const int declared = reader.integer(h[3], 0, kMaxCount, "max bag size");
    const int n = reader.integer(h[4], 0, kMaxCount, "vertex count");
    auto body = read_bags(reader, bags, n, true);
    if (max_bag(body.bags) != declared) reader.fail("declared max bag size " + h[3] + " differs from actual " + std::to_string(max_bag(body.bags)));
    TdFile out;
    out.n = n;
    out.td.bags = std::move(body.bags);
    out.td.tree_edges = std::move(body.edges);
    return out;
}

void emit_td(std::ostream& out, const TreeDecomposition& td, int n) {
    out << "s td " << td.num_nodes() << ' ' << max_bag(td.bags) << ' ' << n << '\n';
    emit_bags(out, td.bags, td.tree_edges);
}

TpFile parse_tp(std::istream& in) {
    LineReader reader(in);
    const auto h = header(reader, "tp", 5);
    const int bags = reader.integer(h[2], 0, kMaxCount, "bag count");
    const int declared = reader.integer(h[3], 0, kMaxCount, "width");
    const int n = reader.integer(h[4], 0, kMaxCount, "vertex count");
    auto body = read_bags(reader, bags, n, false);
    if (max_bag(body.bags) != declared) reader.fail("declared width " + h[3] + " differs from actual " + std::to_string(max_bag(body.bags)));
    TpFile out;
    out.n = n;
    out.tp.bags = std::move(body.bags);
    out.tp.tree_edges = std::move(body.edges);
    return out;
}

void emit_tp(std::ostream& out, const TreePartition& tp, int n) {
    out << "s tp " << tp.num_nodes() << ' ' << tp.width() << ' ' << n << '\n';
    emit_bags(out, tp.bags, tp.tree_edges);
}

TcdFile parse_tcd(std::istream& in) {
    LineReader reader(in);
    const auto h = header(reader, "tcd", 5);
    const int bags = reader.integer(h[2], 0, kMaxCount, "bag count");
    TcdFile out;
    out.width = reader.integer(h[3], 0, kMaxCount, "width");
    out.n = reader.integer(h[4], 0, kMaxCount, "vertex count");
    auto root = reader.next();
    if (!root || (*root)[0] != "r" || root->size() != 2) reader.fail("expected root line 'r <id>'");
    out.tcd.root = reader.integer((*root)[1], 1, std::max(1, bags), "root id") - 1;
    auto body = read_bags(reader, bags, out.n, true);
    out.tcd.bags = std::move(body.bags);
    out.tcd.tree_edges = std::move(body.edges);
    return out;
}

void emit_tcd(std::ostream& out, const TreeCutDecomposition& tcd, int n, int width) {
    out << "s tcd " << tcd.num_nodes() << ' ' << width << ' ' << n << '\n';
    out << "r " << tcd.root + 1 << '\n';
    emit_bags(out, tcd.bags, tcd.tree_edges);
}

std::map<Edge, int> parse_counts(std::istream& in, const Graph& g) {
    LineReader reader(in);
    std::map<Edge, int> out;
    while (auto tokens = reader.next()) {
        if (tokens->size() != 3) reader.fail("expected '<u> <v> <count>'");
        const int n = std::max(1, g.num_vertices());
        const Vertex u = reader.integer((*tokens)[0], 1, n, "vertex") - 1;
        const Vertex v = reader.integer((*tokens)[1], 1, n, "vertex") - 1;
        const int c = reader.integer((*tokens)[2], 0, kMaxCount, "count");
        if (u == v || !g.adjacent(u, v)) reader.fail("count for a non-edge");
        if (!out.emplace(Edge(u, v), c).second) reader.fail("duplicate count line");
    }
    return out;
}

void emit_counts(std::ostream& out, const std::map<Edge, int>& counts) {
    for (const auto& [e, c] : counts) out << e.u + 1 << ' ' << e.v + 1 << ' ' << c << '\n';
}

Graph read_gr(const std::string& path) {
    auto in = open(path);
    return parse_gr(in);
}

TdFile read_td(const std::string& path) {
    auto in = open(path);
    return parse_td(in);
}

TpFile read_tp(const std::string& path) {
    auto in = open(path);
    return parse_tp(in);
}

TcdFile read_tcd(const std::string& path) {
    auto in = open(path);
    return parse_tcd(in);
}

std::map<Edge, int> read_counts(const std::string& path, const Graph& g) {
    auto in = open(path);
    return parse_counts(in, g);
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string to_gr(const Graph& g) {
    std::ostringstream out;
    emit_gr(out, g);
    return out.str();
}

std::string to_td(const TreeDecomposition& td, int n) {
    std::ostringstream out;
    emit_td(out, td, n);
    return out.str();
}

std::string to_tp(const TreePartition& tp, int n) {
    std::ostringstream out;
    emit_tp(out, tp, n);
    return out.str();
}

std::string to_tcd(const TreeCutDecomposition& tcd, int n, int width) {
    std::ostringstream out;
    emit_tcd(out, tcd, n, width);
    return out.str();
}

}  // namespace tpw
