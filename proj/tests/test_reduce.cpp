#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "zcolor/families.hpp"
#include "zcolor/random.hpp"
#include "zcolor/reduce.hpp"
#include "zcolor/verify.hpp"

using namespace zcolor;

namespace {

Graph path(int n)
{
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph(n, es);
}

std::vector<Vertex> class_order(const Coloring& c)
{
    std::vector<Vertex> order;
    for (const auto& cls : c.classes())
        order.insert(order.end(), cls.begin(), cls.end());
    return order;
}

} // namespace

TEST_CASE("greedy coloring")
{
    Graph p4 = path(4);
    CHECK(greedy_coloring(p4) == Coloring{1, 2, 1, 2});
    CHECK(greedy_coloring(p4, {0, 3, 1, 2}) == Coloring{1, 2, 3, 1});
    CHECK_THROWS_AS(greedy_coloring(p4, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(greedy_coloring(p4, {0, 1, 2, 2}), std::invalid_argument);
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            es.emplace_back(i, j);
    CHECK(greedy_coloring(Graph(5, es)).k() == 5);
}

TEST_CASE("grundy_reduce on the hand examples")
{
    Graph k2(2, {{0, 1}});
    auto r = grundy_reduce(k2, Coloring{1, 3});
    CHECK(r.coloring == Coloring{1, 2});
    CHECK(r.trace.moves.empty());
    CHECK(r.trace.class_deletions == std::vector<Color>{2});

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto c = grundy_reduce(c4, Coloring{1, 2, 3, 4});
    CHECK(c.coloring == Coloring{1, 2, 1, 2});
    CHECK(c.trace.moves.size() == 2);
    CHECK(check_grundy(c4, c.coloring).pass);

    CHECK_THROWS_AS(grundy_reduce(k2, Coloring{1, 1}), std::invalid_argument);
}

TEST_CASE("cd_gcd_transform on the hand examples")
{
    // P_4 colored 1,2,3,1: class 1 has no dominating vertex.
    auto p = cd_gcd_transform(path(4), Coloring{1, 2, 3, 1});
    CHECK(check_grundy(path(4), p.coloring).pass);
    CHECK(check_cd(path(4), p.coloring).pass);
    CHECK(p.coloring.k() == 2);

    // P_5 plus u joined to v1, v3, v5 with colors 1,2,3,1,2,4.
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 2}, {5, 4}});
    Coloring start{1, 2, 3, 1, 2, 4};
    REQUIRE(check_grundy(g, start).pass);
    auto r = cd_gcd_transform(g, start);
    CHECK(r.coloring.k() == 2);
    CHECK(check_cd(g, r.coloring).pass);

    CHECK_THROWS_AS(cd_gcd_transform(path(3), Coloring{1, 3, 1}), std::invalid_argument);
}

TEST_CASE("reductions keep their invariants on random graphs")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 5 + trial % 40;
        Graph g = trial % 4 == 0 ? random_tree(n, rng()) : erdos_renyi(n, 0.05 + 0.1 * (trial % 7), rng());
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        // Doubling the greedy colors leaves gaps for the reduction to close.
        Coloring greedy = greedy_coloring(g, order);
        std::vector<Color> spread = greedy.colors();
        for (auto& x : spread)
            x = 2 * x;
        auto gr = grundy_reduce(g, Coloring(spread));
        CHECK(check_grundy(g, gr.coloring).pass);
        CHECK(gr.coloring.k() <= greedy.k());
        std::set<Vertex> moved;
        for (const auto& mv : gr.trace.moves)
            CHECK(moved.insert(mv.vertex).second);

        auto cd = cd_gcd_transform(g, gr.coloring);
        CHECK(check_grundy(g, cd.coloring).pass);
        CHECK(check_cd(g, cd.coloring).pass);
        CHECK(cd.coloring.k() <= gr.coloring.k());
        CHECK(static_cast<int>(cd.trace.moves.size()) <= n);

        auto z = z_transform(g, cd.coloring);
        CHECK(check_z(g, z.coloring).pass);
        CHECK(z.coloring.k() <= cd.coloring.k());
        CHECK(z.trace.iterations <= n);
    }
}

TEST_CASE("z_heuristic is idempotent and bounded")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 30;
        Graph g = erdos_renyi(n, 0.3, rng());
        auto r = z_heuristic(g);
        CHECK(check_z(g, r.coloring).pass);
        CHECK(r.coloring.k() <= g.max_degree() + 1);
        CHECK(r.coloring.is_normalized());
        auto again = z_transform(g, cd_gcd_transform(g, grundy_reduce(g, r.coloring).coloring).coloring);
        CHECK(again.coloring == r.coloring);
        CHECK(again.trace.moves.empty());
        auto star = find_dominating_star(g, r.coloring);
        REQUIRE(star);
        CHECK(is_dominating_star(g, r.coloring, *star));
    }
}

TEST_CASE("z_heuristic against the reference z on small graphs")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(6, 0.5, rng());
        auto r = z_heuristic(g);
        CHECK(brute::z_coloring(g, r.coloring.colors()));
        const auto p = brute::all_params(g);
        CHECK(r.coloring.k() >= p.chi);
        CHECK(r.coloring.k() <= p.z);
    }
}

TEST_CASE("canonic order of R_4 reaches four colors")
{
    ColoredGraph r4 = gen_Rk(4);
    auto r = z_heuristic(r4.graph, class_order(r4.coloring));
    CHECK(r.coloring.k() == 4);
    CHECK(check_z(r4.graph, r.coloring).pass);
}

TEST_CASE("complementary never uses more colors")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = erdos_renyi(8 + trial % 10, 0.35, rng());
        Coloring start = z_heuristic(g, {}).coloring;
        auto r = complementary(g, start, 50, 7);
        CHECK(check_proper(g, r.coloring).pass);
        CHECK(r.coloring.k() <= start.k());
        CHECK(r.tuples_tried <= 50);
        auto again = complementary(g, start, 50, 7);
        CHECK(again.coloring == r.coloring);
    }
    Graph p5b(5, {{0, 2}, {2, 3}, {3, 1}, {1, 4}});
    Coloring three = z_heuristic(p5b).coloring;
    REQUIRE(three.k() == 3);
    auto r = complementary(p5b, three, 1000, 0);
    CHECK(r.exhaustive);
    CHECK(r.tuples_tried == 4);
    CHECK(r.coloring.k() <= 3);
    CHECK_THROWS_AS(complementary(p5b, Coloring{1, 1, 1, 1, 1}, 10, 0), std::invalid_argument);
}

TEST_CASE("iterated z keeps the running best")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(30, 0.5, rng());
        auto r = iterated_z(g, 10, 7);
        REQUIRE(r.round_colors.size() == 10);
        CHECK(r.round_colors[0] == z_heuristic(g).coloring.k());
        for (std::size_t i = 1; i < r.running_best.size(); ++i)
            CHECK(r.running_best[i] <= r.running_best[i - 1]);
        CHECK(r.best.k() == r.running_best.back());
        CHECK(check_z(g, r.best).pass);
        CHECK(iterated_z(g, 10, 7).best == r.best);
    }
    CHECK_THROWS_AS(iterated_z(path(3), 0, 0), std::invalid_argument);
}
