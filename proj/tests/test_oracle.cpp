#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "zcolor/families.hpp"
#include "zcolor/oracle.hpp"
#include "zcolor/random.hpp"
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

Graph cycle(int n)
{
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

void check_against_reference(const Graph& g)
{
    const auto want = brute::all_params(g);
    const auto chi = exact_chi(g);
    const auto gamma = exact_gamma(g);
    const auto b = exact_b(g);
    const auto z = exact_z(g);
    CHECK(chi.value == want.chi);
    CHECK(gamma.value == want.gamma);
    CHECK(b.value == want.b);
    CHECK(z.value == want.z);
    if (g.n() == 0)
        return;
    CHECK(brute::proper(g, chi.witness.colors()));
    CHECK(chi.witness.k() == chi.value);
    CHECK(brute::grundy(g, gamma.witness.colors()));
    CHECK(gamma.witness.k() == gamma.value);
    CHECK(brute::b_coloring(g, b.witness.colors()));
    CHECK(b.witness.k() == b.value);
    CHECK(brute::z_coloring(g, z.witness.colors()));
    CHECK(z.witness.k() == z.value);
}

} // namespace

TEST_CASE("oracle values on the named graphs")
{
    CHECK(exact_z(path(5)).value == 3);
    CHECK(exact_z(cycle(6)).value == 3);
    CHECK(exact_z(complete_bipartite_minus_matching(4, 4)).value == 4);
    CHECK(exact_z(complete_bipartite_minus_matching(5, 4)).value == 2);
    CHECK(exact_gamma(gen_Ht(3)).value == 4);
    CHECK(exact_b(gen_Ht(3)).value == 2);
    CHECK(exact_b(gen_Ft(4)).value == 4);
    CHECK(exact_chi(cycle(5)).value == 3);
    CHECK(exact_chi(Graph(0)).value == 0);
    CHECK(exact_z(Graph(1)).value == 1);
}

TEST_CASE("oracle agrees with full enumeration on every graph up to five vertices")
{
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            CAPTURE(write_dimacs(g));
            check_against_reference(g);
        }
}

TEST_CASE("oracle agrees with full enumeration on random six and seven vertex graphs")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 24; ++trial) {
        Graph g = erdos_renyi(trial < 16 ? 6 : 7, 0.25 + 0.05 * (trial % 8), rng());
        CAPTURE(write_dimacs(g));
        check_against_reference(g);
    }
}

TEST_CASE("size limits and parameter names")
{
    Graph big = path(15);
    CHECK_THROWS_AS(exact_z(big), OracleLimitError);
    CHECK_THROWS_AS(exact_chi(path(13)), OracleLimitError);
    CHECK(exact_chi(path(13), 13).value == 2);
    CHECK(exact(big, Parameter::Z, 20).value == 3);
    CHECK(default_limit(Parameter::Z) == 14);
    CHECK(default_limit(Parameter::Gamma) == 12);
    CHECK(parse_parameter("gamma") == Parameter::Gamma);
    CHECK(to_string(Parameter::B) == "b");
    CHECK_THROWS_AS(parse_parameter("delta"), std::invalid_argument);
}

TEST_CASE("find_coloring and has_z_coloring_at_least")
{
    Graph p5 = path(5);
    CHECK_FALSE(find_coloring(p5, Parameter::Z, 4));
    CHECK_FALSE(find_coloring(p5, Parameter::Z, 6));
    auto three = find_coloring(p5, Parameter::Z, 3);
    REQUIRE(three);
    CHECK(check_z(p5, *three).pass);
    CHECK(has_z_coloring_at_least(p5, 3));
    CHECK_FALSE(has_z_coloring_at_least(p5, 4));
    std::int64_t explored = 0;
    CHECK(find_coloring(cycle(6), Parameter::Chi, 2, &explored));
    CHECK(explored > 0);
}

TEST_CASE("chi <= z <= min(gamma, b)")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = erdos_renyi(5 + trial % 6, 0.4, rng());
        const int z = exact_z(g).value;
        CHECK(exact_chi(g).value <= z);
        CHECK(z <= exact_gamma(g).value);
        CHECK(z <= exact_b(g).value);
    }
}
