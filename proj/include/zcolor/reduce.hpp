#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zcolor/graph.hpp"

namespace zcolor {

struct Move {
    Vertex vertex;
    Color from;
    Color to;

    friend bool operator==(const Move&, const Move&) = default;
};

/// What a reduction did. Colors in moves are the class indices at the time
/// of the move, before any later renaming.
struct ReductionTrace {
    std::vector<Move> moves;
    std::vector<Color> class_deletions;
    int iterations = 0;

    void append(const ReductionTrace& other);
};

template <class T>
struct Reduced {
    T coloring;
    ReductionTrace trace;
};

/// Smallest-admissible-color greedy over `order` (identity when empty).
/// Throws std::invalid_argument if `order` is not a permutation.
Coloring greedy_coloring(const Graph& g, const std::vector<Vertex>& order = {});

/// Grundy-type reduction: scan classes 2..t; a vertex missing some lower
/// color moves to the smallest missing one; emptied classes are removed.
/// Every vertex moves at most once.
Reduced<Coloring> grundy_reduce(const Graph& g, const Coloring& c);

/// Turns a Grundy coloring into one that is Grundy and color-dominating.
/// Classes are scanned from the top down; a class with no CD vertex is
/// dissolved, each member moving to the smallest higher class where it has
/// no neighbor.
Reduced<Coloring> cd_gcd_transform(const Graph& g, const Coloring& c);

/// Repeatedly recolors a vertex of the top class until the top class holds
/// a nice vertex, re-running both reductions after every local recoloring.
/// trace.iterations counts the local recolorings.
Reduced<Coloring> z_transform(const Graph& g, const Coloring& c);

/// Greedy over `seed_order`, then grundy_reduce, cd_gcd_transform and
/// z_transform. The result is a z-coloring with at most max_degree + 1
/// colors.
Reduced<Coloring> z_heuristic(const Graph& g, const std::vector<Vertex>& seed_order = {});

/// Dominating star (u_1, ..., u_k) of a z-coloring, or nullopt.
std::optional<std::vector<Vertex>> find_dominating_star(const Graph& g, const Coloring& c);

struct ComplementaryResult {
    Coloring coloring;
    std::int64_t tuples_tried = 0;
    bool exhaustive = false;
};

/// Augments g with one vertex joined to a representative of every class
/// of the z-coloring `c`, reruns the z pipeline seeded with `c` and keeps
/// the restriction to g with the fewest colors. Enumerates every tuple
/// when the product of class sizes is at most `budget`, else samples
/// `budget` tuples uniformly using `rng_seed`. Never returns more colors
/// than `c`.
ComplementaryResult complementary(const Graph& g, const Coloring& c, std::int64_t budget = 1000,
                                  std::uint64_t rng_seed = 0);

struct IteratedResult {
    Coloring best;
    std::vector<int> round_colors; ///< colors of each round's own output
    std::vector<int> running_best;
};

/// Iterated z heuristic. Round 1 is z_heuristic; round 2 greedy-colors the
/// previous classes in reverse order; later rounds use a random class
/// permutation drawn from `rng_seed`.
IteratedResult iterated_z(const Graph& g, int rounds, std::uint64_t rng_seed = 0);

} // namespace zcolor
