#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcolor/graph.hpp"

namespace zcolor {

enum class ViolationKind {
    MonochromaticEdge, ///< vertex and other share a color
    MissingLowerColor, ///< vertex of some color lacks a neighbor of `color`
    NoDominatingVertex, ///< class `color` has no color-dominating vertex
    NoDominatingStar,  ///< no u_k of the top color sees CD vertices of all colors
};

struct Violation {
    ViolationKind kind;
    Vertex vertex = -1;
    Vertex other = -1;
    Color color = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a coloring check. pass implies no violations; a failing
/// verdict always names concrete vertices or colors.
///
/// The witness depends on the check: for check_cd it holds one CD vertex
/// per class (index 0 for class 1), for check_z the dominating star
/// (u_1, ..., u_k).
struct Verdict {
    bool pass = true;
    std::vector<Violation> violations;
    std::optional<std::vector<Vertex>> witness;

    void fail(Violation v)
    {
        pass = false;
        violations.push_back(v);
    }
};

std::string to_string(ViolationKind kind);
/// Single-line JSON: {"pass":..,"violations":[..],"witness":[..]}.
std::string serialize_verdict(const Verdict& v);

Verdict check_proper(const Graph& g, const Coloring& c);
Verdict check_grundy(const Graph& g, const Coloring& c);

/// Vertices of class `class_index` adjacent to every other color 1..k.
std::vector<Vertex> dominating_vertices(const Graph& g, const Coloring& c, Color class_index);

Verdict check_cd(const Graph& g, const Coloring& c);
bool is_nice_vertex(const Graph& g, const Coloring& c, Vertex v);

/// Proper, Grundy, color-dominating, and a dominating star exists. The
/// star search fixes u_k among CD vertices of the top color and picks any
/// adjacent CD vertex for each other color.
Verdict check_z(const Graph& g, const Coloring& c);

/// Checks a claimed star directly: u_j has color j, u_k is adjacent to
/// every other u_j and each u_j is color-dominating.
bool is_dominating_star(const Graph& g, const Coloring& c, const std::vector<Vertex>& star);

} // namespace zcolor
