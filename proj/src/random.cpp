#include "zcolor/random.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace zcolor {

Graph erdos_renyi(int n, double p, std::uint64_t seed)
{
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("erdos_renyi needs n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(p);
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (keep(rng))
                es.emplace_back(u, v);
    return Graph(n, es);
}

Graph random_tree(int n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("random_tree needs n >= 1");
    if (n <= 2)
        return n == 1 ? Graph(1, std::vector<Edge>{}) : Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (auto& x : code)
        x = pick(rng);
    std::vector<int> degree(n, 1);
    for (int x : code)
        ++degree[x];
    std::vector<Edge> es;
    for (int x : code) {
        Vertex leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        es.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    Vertex a = -1;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) {
            if (a < 0)
                a = v;
            else
                es.emplace_back(a, v);
        }
    return Graph(n, es);
}

Graph random_triangle_free(int n, double p, std::uint64_t seed)
{
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_triangle_free needs n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution keep(p);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<Edge> es;
    for (auto [u, v] : pairs) {
        if (!keep(rng))
            continue;
        bool closes = false;
        for (Vertex w = 0; w < n && !closes; ++w)
            closes = adj[u][w] && adj[v][w];
        if (closes)
            continue;
        adj[u][v] = adj[v][u] = 1;
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

std::vector<Graph> all_graphs(int n)
{
    if (n < 0 || n > 7)
        throw std::invalid_argument("all_graphs supports 0 <= n <= 7");
    if (n == 0)
        return {Graph(0)};
    // Every graph on n vertices is some graph on n - 1 vertices plus a
    // vertex joined to a subset of them.
    std::map<std::string, Graph> classes;
    for (const Graph& h : all_graphs(n - 1)) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
            std::vector<Edge> extra;
            for (Vertex v = 0; v < n - 1; ++v)
                if (mask >> v & 1u)
                    extra.emplace_back(v, n - 1);
            Graph g = h.with_vertices_and_edges(1, extra);
            classes.try_emplace(colored_canonical_form(g, Coloring(std::vector<Color>(n, 1))), std::move(g));
        }
    }
    std::vector<Graph> out;
    for (auto& [cert, g] : classes)
        out.push_back(std::move(g));
    return out;
}

} // namespace zcolor
