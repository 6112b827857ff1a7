#pragma once

#include <cstdint>
#include <vector>

#include "zcolor/graph.hpp"

namespace zcolor {

/// G(n, p) with each pair kept independently.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Uniform labeled tree on n vertices from a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Random triangle-free graph: pairs are visited in random order and kept
/// with probability p unless they would close a triangle.
Graph random_triangle_free(int n, double p, std::uint64_t seed);

/// One representative of every isomorphism class of graphs on n vertices
/// (n <= 7), sorted by canonical form.
std::vector<Graph> all_graphs(int n);

} // namespace zcolor
