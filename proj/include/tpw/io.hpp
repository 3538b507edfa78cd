#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "tpw/decomposition.hpp"
#include "tpw/graph.hpp"

namespace tpw {

// All formats are line oriented with 1-indexed ids on disk; lines starting
// with `c` are comments. Parsers throw ParseError carrying the line number.

Graph parse_gr(std::istream& in);
void emit_gr(std::ostream& out, const Graph& g);

struct TdFile {
    TreeDecomposition td;
    int n = 0;
};

struct TpFile {
    TreePartition tp;
    int n = 0;
};

struct TcdFile {
    TreeCutDecomposition tcd;
    int n = 0;
    int width = 0;  ///< as declared in the header
};

TdFile parse_td(std::istream& in);
void emit_td(std::ostream& out, const TreeDecomposition& td, int n);

TpFile parse_tp(std::istream& in);
void emit_tp(std::ostream& out, const TreePartition& tp, int n);

TcdFile parse_tcd(std::istream& in);
void emit_tcd(std::ostream& out, const TreeCutDecomposition& tcd, int n, int width);

/// Subdivision counts, one `u v c` line per edge; missing edges count 0.
std::map<Edge, int> parse_counts(std::istream& in, const Graph& g);
void emit_counts(std::ostream& out, const std::map<Edge, int>& counts);

// File wrappers; an unreadable path raises std::runtime_error.
Graph read_gr(const std::string& path);
TdFile read_td(const std::string& path);
TpFile read_tp(const std::string& path);
TcdFile read_tcd(const std::string& path);
std::map<Edge, int> read_counts(const std::string& path, const Graph& g);

void write_text(const std::string& path, const std::string& content);

std::string to_gr(const Graph& g);
std::string to_td(const TreeDecomposition& td, int n);
std::string to_tp(const TreePartition& tp, int n);
std::string to_tcd(const TreeCutDecomposition& tcd, int n, int width);

}  // namespace tpw
