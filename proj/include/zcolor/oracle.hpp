#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "zcolor/graph.hpp"

namespace zcolor {

/// Coloring parameters computed exactly by the oracle.
enum class Parameter { Chi, Gamma, B, Z };

std::string to_string(Parameter p);
/// Accepts "chi", "gamma", "b", "z".
Parameter parse_parameter(const std::string& name);

struct OracleResult {
    int value = 0;
    Coloring witness;
    std::int64_t explored = 0; ///< complete assignments examined
};

class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

OracleResult exact_chi(const Graph& g, int limit_n = 12);
OracleResult exact_gamma(const Graph& g, int limit_n = 12);
OracleResult exact_b(const Graph& g, int limit_n = 12);
OracleResult exact_z(const Graph& g, int limit_n = 14);
OracleResult exact(const Graph& g, Parameter p, int limit_n);
int default_limit(Parameter p);

/// A coloring using exactly k colors that satisfies the defining predicate
/// of `p` (proper for Chi, Grundy for Gamma, b-coloring for B, z-coloring
/// for Z), or nullopt. Exhaustive; no size limit beyond 64 vertices.
std::optional<Coloring> find_coloring(const Graph& g, Parameter p, int k, std::int64_t* explored = nullptr);

/// True when g has a z-coloring with at least k colors.
bool has_z_coloring_at_least(const Graph& g, int k);

} // namespace zcolor
