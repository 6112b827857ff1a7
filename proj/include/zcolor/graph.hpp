#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zcolor {

using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised by every text parser in the library. The message carries the
/// offending line number when one is known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0);
    int line() const { return line_; }

private:
    int line_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted ascending and free of duplicates and
/// self-loops; the type is immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an arbitrary edge list. Duplicate edges and
    /// either orientation collapse to one edge. Self-loops and
    /// out-of-range endpoints throw std::invalid_argument.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    Graph without_edge(Vertex u, Vertex v) const;
    /// Adds `extra` isolated vertices followed by the given edges.
    Graph with_vertices_and_edges(int extra, std::span<const Edge> edges) const;
    Graph induced(std::span<const Vertex> vertices) const;

    bool is_connected() const;
    bool has_triangle() const;
    /// True when some 5 vertices induce a path.
    bool has_induced_p5() const;
    bool is_tree() const { return n() > 0 && m() == n() - 1 && is_connected(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

/// Total assignment vertex -> color, colors 1-based.
///
/// A coloring may temporarily be non-normalized (gaps in the used colors),
/// e.g. as the input to a reduction. k() is the largest color used; every
/// coloring the library emits is normalized so the used colors are exactly
/// 1..k().
class Coloring {
public:
    Coloring() = default;
    /// Throws std::invalid_argument on a color < 1.
    explicit Coloring(std::vector<Color> colors);
    Coloring(std::initializer_list<Color> colors);

    int size() const { return static_cast<int>(colors_.size()); }
    int k() const { return k_; }
    Color operator[](Vertex v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }

    bool is_normalized() const;
    /// Compacts unused colors, shifting higher colors down and keeping
    /// the relative order of the classes.
    Coloring normalized() const;

    /// Color classes C_1..C_k, index 0 holds C_1. Members ascending.
    std::vector<std::vector<Vertex>> classes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    int k_ = 0;
};

/// Coloring with classes read in the given order: the vertices of
/// classes[0] get color 1 and so on.
Coloring coloring_from_classes(int n, const std::vector<std::vector<Vertex>>& classes);

/// A graph together with a coloring and an optional dominating star
/// (u_1, ..., u_k) where u_j has color j.
struct ColoredGraph {
    Graph graph;
    Coloring coloring;
    std::optional<std::vector<Vertex>> dominating_star;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

// DIMACS .col

struct DimacsDocument {
    Graph graph;
    std::vector<std::string> comments;
};

/// Reads the "p edge n m" / "e u v" grammar. Vertices are 1-indexed in the
/// text and 0-indexed in the returned graph.
DimacsDocument read_dimacs(const std::string& text);
Graph parse_dimacs(const std::string& text);
std::string write_dimacs(const Graph& g);

// Coloring record

struct ColoringRecord {
    Graph graph;
    Coloring coloring;
    std::optional<std::vector<Vertex>> dominating_star;
};

/// Single-line JSON record with fields in fixed order:
/// n, edges, k, colors, classes, dominating_star (when present).
std::string serialize_coloring(const Graph& g, const Coloring& c,
                               const std::optional<std::vector<Vertex>>& star = std::nullopt);
std::string serialize_coloring(const ColoredGraph& cg);
ColoringRecord parse_coloring_record(const std::string& text);

// Colored isomorphism

/// Byte string equal for two colored graphs iff some isomorphism maps each
/// vertex onto a vertex of the same color.
std::string colored_canonical_form(const Graph& g, const Coloring& c);
std::string colored_canonical_form(const ColoredGraph& cg);
bool is_colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

/// A relabeling perm[v] = new index of v; returns the image graph.
Graph relabel(const Graph& g, std::span<const Vertex> perm);
Coloring relabel(const Coloring& c, std::span<const Vertex> perm);

} // namespace zcolor
