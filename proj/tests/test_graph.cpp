#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "zcolor/graph.hpp"
#include "zcolor/random.hpp"

using namespace zcolor;

TEST_CASE("graph construction collapses duplicates and rejects bad edges")
{
    Graph g(4, {{0, 1}, {1, 0}, {2, 3}, {0, 1}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("graph helpers")
{
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(p5.is_tree());
    CHECK(p5.is_connected());
    CHECK_FALSE(p5.has_triangle());
    CHECK(p5.has_induced_p5());
    CHECK(p5.max_degree() == 2);

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_FALSE(c5.has_induced_p5());
    CHECK_FALSE(c5.is_tree());

    Graph split = p5.without_edge(2, 3);
    CHECK(split.m() == 3);
    CHECK_FALSE(split.is_connected());

    Graph k3 = Graph(2, {{0, 1}}).with_vertices_and_edges(1, std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(k3.has_triangle());

    std::vector<Vertex> keep{1, 2, 3};
    Graph mid = p5.induced(keep);
    CHECK(mid.n() == 3);
    CHECK(mid.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("coloring normalization and classes")
{
    Coloring c{1, 3, 3, 5};
    CHECK(c.k() == 5);
    CHECK_FALSE(c.is_normalized());
    Coloring n = c.normalized();
    CHECK(n == Coloring{1, 2, 2, 3});
    CHECK(n.classes() == std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3}});
    CHECK_THROWS_AS(Coloring({0, 1}), std::invalid_argument);
    CHECK(coloring_from_classes(4, {{3}, {0, 2}, {1}}) == Coloring{2, 3, 2, 1});
}

TEST_CASE("DIMACS round trip and comments")
{
    const std::string text = "c a small graph\nc second\np edge 4 3\ne 1 2\ne 2 3\n\ne 4 3\n";
    DimacsDocument doc = read_dimacs(text);
    CHECK(doc.comments == std::vector<std::string>{"a small graph", "second"});
    CHECK(doc.graph.n() == 4);
    CHECK(doc.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(parse_dimacs(write_dimacs(doc.graph)) == doc.graph);
    CHECK(write_dimacs(doc.graph) == "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
}

TEST_CASE("DIMACS errors carry line numbers")
{
    struct Case {
        std::string text;
        int line;
    };
    const std::vector<Case> cases = {
        {"p edge 3\n", 1},
        {"p edge 3 1\np edge 3 1\n", 2},
        {"e 1 2\np edge 3 1\n", 1},
        {"c ok\np edge 3 1\ne 1 4\n", 3},
        {"p edge 3 1\ne 2 2\n", 2},
        {"p edge 3 1\nx 1 2\n", 2},
        {"p edge 3 1\ne 1 two\n", 2},
    };
    for (const auto& cs : cases) {
        CAPTURE(cs.text);
        try {
            parse_dimacs(cs.text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == cs.line);
        }
    }
    CHECK_THROWS_AS(parse_dimacs("c only a comment\n"), ParseError);
}

TEST_CASE("coloring record round trip with fixed key order")
{
    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    Coloring c{3, 2, 1, 3, 2, 1};
    const std::string rec = serialize_coloring(c6, c, std::vector<Vertex>{2, 1, 0});
    CHECK(rec ==
          "{\"n\":6,\"edges\":[[0,1],[0,5],[1,2],[2,3],[3,4],[4,5]],\"k\":3,\"colors\":[3,2,1,3,2,1],"
          "\"classes\":[[2,5],[1,4],[0,3]],\"dominating_star\":[2,1,0]}\n");
    ColoringRecord back = parse_coloring_record(rec);
    CHECK(back.graph == c6);
    CHECK(back.coloring == c);
    REQUIRE(back.dominating_star);
    CHECK(*back.dominating_star == std::vector<Vertex>{2, 1, 0});

    CHECK_THROWS_AS(parse_coloring_record("{\"n\":2"), ParseError);
    CHECK_THROWS_AS(parse_coloring_record("{\"n\":2,\"edges\":[],\"k\":1,\"colors\":[1]}"), ParseError);
}

namespace {

std::vector<int> random_colors(int n, int k, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(1, k);
    std::vector<int> c(n);
    for (auto& x : c)
        x = pick(rng);
    return c;
}

} // namespace

TEST_CASE("colored canonical form agrees with brute-force isomorphism")
{
    std::mt19937_64 rng(11);
    int agree_iso = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 6;
        Graph a = erdos_renyi(n, 0.45, rng());
        Graph b = erdos_renyi(n, 0.45, rng());
        const int k = 1 + trial % 3;
        auto ca = random_colors(n, k, rng);
        auto cb = random_colors(n, k, rng);
        // Half the time compare against a relabeled copy of a.
        if (trial % 2 == 0) {
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            b = relabel(a, perm);
            cb = relabel(Coloring(ca), perm).colors();
        }
        const bool fast = colored_canonical_form(a, Coloring(ca)) == colored_canonical_form(b, Coloring(cb));
        const bool slow = brute::colored_isomorphic(a, ca, b, cb);
        CHECK(fast == slow);
        agree_iso += slow;
    }
    CHECK(agree_iso >= 200);
}

TEST_CASE("canonical form is invariant under relabeling of larger graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 10 + trial % 25;
        Graph g = trial % 3 == 0 ? random_tree(n, rng()) : erdos_renyi(n, 0.2, rng());
        auto c = random_colors(n, 3, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ColoredGraph x{g, Coloring(c), std::nullopt};
        ColoredGraph y{relabel(g, perm), relabel(Coloring(c), perm), std::nullopt};
        CHECK(is_colored_isomorphic(x, y));
    }
}

TEST_CASE("colors are labels, never permuted")
{
    Graph p3(3, {{0, 1}, {1, 2}});
    ColoredGraph a{p3, Coloring{1, 2, 1}, std::nullopt};
    ColoredGraph b{p3, Coloring{2, 1, 2}, std::nullopt};
    CHECK_FALSE(is_colored_isomorphic(a, b));
    // Highly symmetric graphs still finish quickly.
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            es.emplace_back(i, 8 + j);
    Graph k88(16, es);
    Coloring ones(std::vector<Color>(16, 1));
    CHECK(colored_canonical_form(k88, ones) == colored_canonical_form(k88, ones));
}

TEST_CASE("random generators")
{
    const std::vector<std::size_t> counts{1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n)
        CHECK(all_graphs(n).size() == counts[n - 1]);
    for (std::uint64_t s = 0; s < 50; ++s) {
        CHECK(random_tree(1 + s % 20, s).is_tree());
        CHECK_FALSE(random_triangle_free(12, 0.5, s).has_triangle());
    }
    CHECK(erdos_renyi(20, 0.3, 9) == erdos_renyi(20, 0.3, 9));
    CHECK(erdos_renyi(10, 1.0, 1).m() == 45);
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), std::invalid_argument);
}
