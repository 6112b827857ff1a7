#pragma once

// Reference implementations written straight from the definitions, with no
// pruning and no code shared with the library beyond the Graph type. Only
// usable on tiny graphs.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "zcolor/graph.hpp"

namespace brute {

using zcolor::Graph;
using zcolor::Vertex;

inline bool adjacent(const Graph& g, Vertex u, Vertex v)
{
    for (Vertex w : g.neighbors(u))
        if (w == v)
            return true;
    return false;
}

inline bool sees(const Graph& g, const std::vector<int>& c, Vertex v, int color)
{
    for (Vertex w : g.neighbors(v))
        if (c[w] == color)
            return true;
    return false;
}

inline int num_colors(const std::vector<int>& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()); }

inline bool proper(const Graph& g, const std::vector<int>& c)
{
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex w : g.neighbors(u))
            if (c[u] == c[w])
                return false;
    return true;
}

inline bool grundy(const Graph& g, const std::vector<int>& c)
{
    if (!proper(g, c))
        return false;
    for (Vertex v = 0; v < g.n(); ++v)
        for (int i = 1; i < c[v]; ++i)
            if (!sees(g, c, v, i))
                return false;
    return true;
}

inline bool dominating(const Graph& g, const std::vector<int>& c, Vertex v)
{
    for (int i = 1; i <= num_colors(c); ++i)
        if (i != c[v] && !sees(g, c, v, i))
            return false;
    return true;
}

inline bool b_coloring(const Graph& g, const std::vector<int>& c)
{
    if (!proper(g, c))
        return false;
    for (int i = 1; i <= num_colors(c); ++i) {
        bool found = false;
        for (Vertex v = 0; v < g.n(); ++v)
            found = found || (c[v] == i && dominating(g, c, v));
        if (!found)
            return false;
    }
    return true;
}

inline bool z_coloring(const Graph& g, const std::vector<int>& c)
{
    if (!grundy(g, c) || !b_coloring(g, c))
        return false;
    const int k = num_colors(c);
    for (Vertex u = 0; u < g.n(); ++u) {
        if (c[u] != k || !dominating(g, c, u))
            continue;
        bool star = true;
        for (int j = 1; j < k && star; ++j) {
            bool found = false;
            for (Vertex w : g.neighbors(u))
                found = found || (c[w] == j && dominating(g, c, w));
            star = found;
        }
        if (star)
            return true;
    }
    return false;
}

/// Calls visit on every coloring with colors 1..n whose used colors are
/// exactly 1..k for some k (n^n candidates, filtered).
inline void for_each_surjective(int n, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> c(n, 1);
    while (true) {
        std::vector<char> used(n + 1, 0);
        for (int x : c)
            used[x] = 1;
        const int k = num_colors(c);
        bool ok = true;
        for (int i = 1; i <= k; ++i)
            ok = ok && used[i];
        if (ok)
            visit(c);
        int pos = 0;
        while (pos < n && ++c[pos] > n)
            c[pos++] = 1;
        if (pos == n)
            break;
    }
}

struct Params {
    int chi = 0;
    int gamma = 0;
    int b = 0;
    int z = 0;
};

inline Params all_params(const Graph& g)
{
    Params p;
    if (g.n() == 0)
        return p;
    p.chi = g.n();
    for_each_surjective(g.n(), [&](const std::vector<int>& c) {
        if (!proper(g, c))
            return;
        const int k = num_colors(c);
        p.chi = std::min(p.chi, k);
        if (grundy(g, c))
            p.gamma = std::max(p.gamma, k);
        if (b_coloring(g, c))
            p.b = std::max(p.b, k);
        if (z_coloring(g, c))
            p.z = std::max(p.z, k);
    });
    return p;
}

/// Color-preserving isomorphism by trying every permutation.
inline bool colored_isomorphic(const Graph& a, const std::vector<int>& ca, const Graph& b, const std::vector<int>& cb)
{
    if (a.n() != b.n() || a.m() != b.m())
        return false;
    std::vector<Vertex> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex v = 0; v < a.n() && ok; ++v)
            ok = ca[v] == cb[perm[v]];
        for (Vertex u = 0; u < a.n() && ok; ++u)
            for (Vertex w : a.neighbors(u))
                if (!adjacent(b, perm[u], perm[w])) {
                    ok = false;
                    break;
                }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace brute
