#include "zcolor/verify.hpp"

#include <algorithm>

#include <json.hpp>

namespace zcolor {

namespace {

void require_total(const Graph& g, const Coloring& c)
{
    if (c.size() != g.n())
        throw std::invalid_argument("coloring is not total: " + std::to_string(c.size()) + " colors for " +
                                    std::to_string(g.n()) + " vertices");
}

void require_proper(const Graph& g, const Coloring& c)
{
    if (!check_proper(g, c).pass)
        throw std::invalid_argument("coloring is not proper");
}

// present[c] != 0 iff v has a neighbor of color c.
std::vector<char> neighbor_colors(const Graph& g, const Coloring& c, Vertex v)
{
    std::vector<char> present(c.k() + 1, 0);
    for (Vertex w : g.neighbors(v))
        present[c[w]] = 1;
    return present;
}

bool is_cd_vertex(const Graph& g, const Coloring& c, Vertex v)
{
    auto present = neighbor_colors(g, c, v);
    for (Color j = 1; j <= c.k(); ++j)
        if (j != c[v] && !present[j])
            return false;
    return true;
}

} // namespace

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::MonochromaticEdge:
        return "monochromatic_edge";
    case ViolationKind::MissingLowerColor:
        return "missing_lower_color";
    case ViolationKind::NoDominatingVertex:
        return "no_dominating_vertex";
    case ViolationKind::NoDominatingStar:
        return "no_dominating_star";
    }
    return "unknown";
}

std::string serialize_verdict(const Verdict& v)
{
    nlohmann::ordered_json out;
    out["pass"] = v.pass;
    auto list = nlohmann::ordered_json::array();
    for (const auto& x : v.violations) {
        nlohmann::ordered_json item;
        item["kind"] = to_string(x.kind);
        item["vertex"] = x.vertex;
        item["other"] = x.other;
        item["color"] = x.color;
        list.push_back(item);
    }
    out["violations"] = list;
    if (v.witness)
        out["witness"] = *v.witness;
    return out.dump() + "\n";
}

Verdict check_proper(const Graph& g, const Coloring& c)
{
    require_total(g, c);
    Verdict out;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            out.fail({ViolationKind::MonochromaticEdge, u, v, c[u]});
    return out;
}

Verdict check_grundy(const Graph& g, const Coloring& c)
{
    require_total(g, c);
    require_proper(g, c);
    Verdict out;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto present = neighbor_colors(g, c, v);
        for (Color i = 1; i < c[v]; ++i)
            if (!present[i])
                out.fail({ViolationKind::MissingLowerColor, v, -1, i});
    }
    return out;
}

std::vector<Vertex> dominating_vertices(const Graph& g, const Coloring& c, Color class_index)
{
    require_total(g, c);
    if (class_index < 1 || class_index > c.k())
        throw std::out_of_range("class index " + std::to_string(class_index) + " outside 1.." +
                                std::to_string(c.k()));
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n(); ++v)
        if (c[v] == class_index && is_cd_vertex(g, c, v))
            out.push_back(v);
    return out;
}

Verdict check_cd(const Graph& g, const Coloring& c)
{
    require_total(g, c);
    require_proper(g, c);
    Verdict out;
    std::vector<Vertex> witness;
    for (Color i = 1; i <= c.k(); ++i) {
        auto cd = dominating_vertices(g, c, i);
        if (cd.empty())
            out.fail({ViolationKind::NoDominatingVertex, -1, -1, i});
        else
            witness.push_back(cd.front());
    }
    if (out.pass)
        out.witness = std::move(witness);
    return out;
}

bool is_nice_vertex(const Graph& g, const Coloring& c, Vertex v)
{
    require_total(g, c);
    const int t = c.k();
    if (c[v] != t)
        return false;
    std::vector<char> seen(t + 1, 0);
    for (Vertex w : g.neighbors(v))
        if (c[w] != t && is_cd_vertex(g, c, w))
            seen[c[w]] = 1;
    for (Color j = 1; j < t; ++j)
        if (!seen[j])
            return false;
    return true;
}

Verdict check_z(const Graph& g, const Coloring& c)
{
    require_total(g, c);
    Verdict out = check_proper(g, c);
    if (!out.pass)
        return out;
    out = check_grundy(g, c);
    Verdict cd = check_cd(g, c);
    for (const auto& v : cd.violations)
        out.fail(v);
    if (!out.pass)
        return out;

    const int k = c.k();
    std::vector<char> cd_vertex(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        cd_vertex[v] = is_cd_vertex(g, c, v);
    for (Vertex top = 0; top < g.n(); ++top) {
        if (c[top] != k || !cd_vertex[top])
            continue;
        std::vector<Vertex> star(k, -1);
        star[k - 1] = top;
        for (Vertex w : g.neighbors(top))
            if (cd_vertex[w] && star[c[w] - 1] < 0)
                star[c[w] - 1] = w;
        if (std::all_of(star.begin(), star.end(), [](Vertex s) { return s >= 0; })) {
            out.witness = std::move(star);
            return out;
        }
    }
    out.fail({ViolationKind::NoDominatingStar, -1, -1, k});
    return out;
}

bool is_dominating_star(const Graph& g, const Coloring& c, const std::vector<Vertex>& star)
{
    require_total(g, c);
    const int k = c.k();
    if (static_cast<int>(star.size()) != k)
        return false;
    for (int j = 0; j < k; ++j) {
        Vertex u = star[j];
        if (u < 0 || u >= g.n() || c[u] != j + 1 || !is_cd_vertex(g, c, u))
            return false;
        if (j != k - 1 && !g.has_edge(star[k - 1], u))
            return false;
    }
    return true;
}

} // namespace zcolor
