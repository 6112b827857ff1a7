#include "zcolor/families.hpp"

#include <stdexcept>

namespace zcolor {

std::string to_string(Family f)
{
    switch (f) {
    case Family::Ht:
        return "Ht";
    case Family::Ft:
        return "Ft";
    case Family::Gt:
        return "Gt";
    case Family::Rk:
        return "Rk";
    case Family::Tk:
        return "Tk";
    case Family::KttMinusMatching:
        return "Crown";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    for (Family f : {Family::Ht, Family::Ft, Family::Gt, Family::Rk, Family::Tk, Family::KttMinusMatching})
        if (to_string(f) == name)
            return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Graph complete_bipartite_minus_matching(int t, int removed)
{
    if (t < 1 || removed < 0 || removed > t)
        throw std::invalid_argument("need t >= 1 and 0 <= removed <= t");
    std::vector<Edge> es;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j || i >= removed)
                es.emplace_back(i, t + j);
    return Graph(2 * t, es);
}

Graph gen_Ht(int t)
{
    if (t < 2)
        throw std::invalid_argument("H_t needs t >= 2");
    return complete_bipartite_minus_matching(t, t - 1);
}

Graph gen_Ft(int t)
{
    if (t < 3)
        throw std::invalid_argument("F_t needs t >= 3");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < t; ++i)
        es.emplace_back(i, i + 1);
    int next = t;
    for (int i = 0; i < t; ++i) {
        int leaves = (i == 0 || i == t - 1) ? t - 2 : t - 3;
        for (int l = 0; l < leaves; ++l)
            es.emplace_back(i, next++);
    }
    return Graph(next, es);
}

Graph gen_Gt(int t)
{
    if (t < 3)
        throw std::invalid_argument("G_t needs t >= 3");
    Graph h = gen_Ht(t);
    Graph f = gen_Ft(t);
    std::vector<Edge> es = h.edges();
    const int offset = h.n();
    for (auto [u, v] : f.edges())
        es.emplace_back(u + offset, v + offset);
    const Vertex w = h.n() + f.n();
    const Vertex a_t = t - 1;
    es.emplace_back(w, a_t);
    es.emplace_back(w, offset);
    return Graph(w + 1, es);
}

ColoredGraph gen_Rk(int k)
{
    if (k < 1)
        throw std::invalid_argument("R_k needs k >= 1");
    std::vector<Edge> es;
    std::vector<Color> colors{k};
    // Root, then u_1..u_{k-1}, then deeper levels breadth first.
    struct Pending {
        Vertex v;
        Color color;
        Color parent_color;
        bool star_leaf;
    };
    std::vector<Pending> queue;
    for (Color j = 1; j < k; ++j) {
        Vertex v = static_cast<Vertex>(colors.size());
        colors.push_back(j);
        es.emplace_back(0, v);
        queue.push_back({v, j, k, true});
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Pending p = queue[head];
        // Star leaves are color-dominating (all colors 1..k except their
        // own); every other vertex only needs its lower colors.
        Color limit = p.star_leaf ? k - 1 : p.color - 1;
        for (Color c = 1; c <= limit; ++c) {
            if (c == p.color || c == p.parent_color)
                continue;
            Vertex v = static_cast<Vertex>(colors.size());
            colors.push_back(c);
            es.emplace_back(p.v, v);
            queue.push_back({v, c, p.color, false});
        }
    }
    ColoredGraph out;
    out.graph = Graph(static_cast<int>(colors.size()), es);
    out.coloring = Coloring(std::move(colors));
    std::vector<Vertex> star;
    for (Color j = 1; j < k; ++j)
        star.push_back(j);
    star.push_back(0);
    out.dominating_star = std::move(star);
    return out;
}

ColoredGraph gen_Tk(int k)
{
    if (k < 1)
        throw std::invalid_argument("T_k needs k >= 1");
    std::vector<Edge> es;
    std::vector<Color> colors{1};
    for (int level = 1; level < k; ++level) {
        // Copy the current tree, join the roots, promote the original root.
        const int size = static_cast<int>(colors.size());
        const auto old_edges = es;
        for (auto [u, v] : old_edges)
            es.emplace_back(u + size, v + size);
        for (int v = 0; v < size; ++v)
            colors.push_back(colors[v]);
        es.emplace_back(0, size);
        colors[0] = level + 1;
    }
    ColoredGraph out;
    out.graph = Graph(static_cast<int>(colors.size()), es);
    out.coloring = Coloring(std::move(colors));
    return out;
}

Graph generate(const FamilySpec& spec)
{
    switch (spec.name) {
    case Family::Ht:
        return gen_Ht(spec.parameter);
    case Family::Ft:
        return gen_Ft(spec.parameter);
    case Family::Gt:
        return gen_Gt(spec.parameter);
    case Family::Rk:
        return gen_Rk(spec.parameter).graph;
    case Family::Tk:
        return gen_Tk(spec.parameter).graph;
    case Family::KttMinusMatching:
        return complete_bipartite_minus_matching(spec.parameter, spec.parameter);
    }
    throw std::invalid_argument("unknown family");
}

Graph attach_leaves(const Graph& g)
{
    std::vector<Edge> extra;
    for (Vertex v = 0; v < g.n(); ++v)
        extra.emplace_back(v, g.n() + v);
    return g.with_vertices_and_edges(g.n(), extra);
}

std::vector<std::int64_t> a_sequence(int k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("a_sequence needs k_max >= 1");
    if (k_max > 58)
        throw std::invalid_argument("a_sequence overflows beyond k = 58");
    std::vector<std::int64_t> out;
    std::int64_t recurrence = 1;
    for (int k = 1; k <= k_max; ++k) {
        const std::int64_t pow = std::int64_t{1} << (k - 1);
        const std::int64_t closed = (k - 3) * pow + k + 2;
        if (k > 1)
            recurrence = 2 * recurrence + pow - k;
        if (closed != recurrence)
            throw std::logic_error("closed form and recurrence disagree at k = " + std::to_string(k));
        out.push_back(closed);
    }
    return out;
}

} // namespace zcolor
