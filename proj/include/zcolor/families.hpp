#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcolor/graph.hpp"

namespace zcolor {

enum class Family { Ht, Ft, Gt, Rk, Tk, KttMinusMatching };

struct FamilySpec {
    Family name;
    int parameter;
};

std::string to_string(Family f);
/// Accepts "Ht", "Ft", "Gt", "Rk", "Tk", "Crown".
Family parse_family(const std::string& name);

/// K_{t,t} on a_1..a_t (vertices 0..t-1) and b_1..b_t (t..2t-1) minus the
/// matching edges a_i b_i for i = 1..removed.
Graph complete_bipartite_minus_matching(int t, int removed);

/// K_{t,t} minus t-1 matching edges; t >= 2.
Graph gen_Ht(int t);

/// Path v_1..v_t (vertices 0..t-1) with t-2 leaves on each end vertex and
/// t-3 leaves on every inner vertex; t >= 3.
Graph gen_Ft(int t);

/// Disjoint H_t and F_t joined through a fresh vertex w adjacent to a_t
/// and v_1. Vertex layout: H_t first, then F_t, then w; t >= 3.
Graph gen_Gt(int t);

/// The smallest tree with z-number k and its canonic z-coloring. Vertex 0
/// is the root u_k; vertices 1..k-1 are u_1..u_{k-1}; the star is
/// attached. k >= 1.
ColoredGraph gen_Rk(int k);

/// The Grundy tree atom T_k (binomial tree on 2^(k-1) vertices) with its
/// Grundy coloring; vertex 0 is the root of color k. k >= 1.
ColoredGraph gen_Tk(int k);

/// Graph of the named family; Rk and Tk drop their coloring.
Graph generate(const FamilySpec& spec);

/// Every vertex v gains a fresh leaf n + v.
Graph attach_leaves(const Graph& g);

/// a_1..a_{k_max} from the closed form (k-3) 2^(k-1) + k + 2. Throws
/// std::logic_error should the closed form ever disagree with the
/// recurrence a_k = 2 a_{k-1} + 2^(k-1) - k, a_1 = 1.
std::vector<std::int64_t> a_sequence(int k_max);

} // namespace zcolor
