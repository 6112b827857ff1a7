#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zcolor/graph.hpp"

namespace zcolor {

/// One Grundify choice for a color i below the class k being repaired:
/// vertices `attached` of class k without a color-i neighbor are joined to
/// the existing color-i vertices `attached_to` (same positions); the rest
/// of those vertices are joined to `fresh` new color-i vertices, vertex
/// `unattached[p]` going to fresh vertex `fresh_of[p]`.
struct GrundifyChoice {
    Color k = 0;
    Color i = 0;
    std::vector<Vertex> attached;
    std::vector<Vertex> attached_to;
    std::vector<Vertex> unattached;
    std::vector<Vertex> fresh_of;
    int fresh = 0;

    friend bool operator==(const GrundifyChoice&, const GrundifyChoice&) = default;
};

/// How an atom was built. phase1_targets[j-2][p-1] is the color-j
/// neighbor given to u_p (p < j); phase1_fresh[j-2] counts the new color-j
/// vertices. Vertex ids refer to the atom's own numbering.
struct Provenance {
    std::vector<int> phase1_fresh;
    std::vector<std::vector<Vertex>> phase1_targets;
    std::vector<GrundifyChoice> phase2;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Colored graph with its canonic coloring and dominating star. The
/// construction numbers the star center (top color) 0 and u_j as vertex j.
struct Atom {
    ColoredGraph cg;
    Provenance provenance;
};

struct AtomCatalog {
    int t = 0;
    bool triangle_free = false;
    std::vector<Atom> atoms;
    /// Candidates dropped because deleting some edge keeps a z-coloring
    /// with t colors.
    int removed_by_minimality = 0;
};

struct AtomOptions {
    int max_t = 4;
    /// Lifts the t cap and the triangle-free requirement at the cap.
    bool allow_large = false;
};

class AtomLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Whether every star leaf u_p (p < t) has neighbors of all colors p+1..t.
bool satisfies_club(const ColoredGraph& cg, int t);

/// Phase I from the star S_{1,t}: center color t+1, leaves u_1..u_t. For
/// each j in 2..t the leaves u_1..u_{j-1} each receive one color-j
/// neighbor, either u_j or one of m_j fresh vertices, every fresh vertex
/// being used. Results are deduplicated up to colored isomorphism.
std::vector<Atom> phase1_generate(int t, const AtomOptions& options = {}, bool triangle_free = false);

/// Makes class k a Grundy class in every possible minimal way, see
/// GrundifyChoice. Returns the input alone when class k is already Grundy.
std::vector<Atom> grundify(const Atom& atom, Color k, bool triangle_free = false);
std::vector<ColoredGraph> grundify(const ColoredGraph& cg, Color k);

/// Phase I on S_{1,t-1}, Grundify for k = t-1 down to 2, then keep the
/// candidates whose canonic coloring is a z-coloring with t colors and
/// that are edge-minimal for z >= t. Sorted by canonical certificate.
AtomCatalog generate_atoms(int t, bool triangle_free, const AtomOptions& options = {});

/// JSON lines: a header record then one record per atom.
std::string serialize_catalog(const AtomCatalog& catalog);
AtomCatalog parse_catalog(const std::string& text);

struct Embedding {
    std::vector<Vertex> map; ///< atom vertex -> target vertex
};

/// Injective map keeping atom edges and sending equal-colored atom
/// vertices to non-adjacent target vertices, if one exists.
std::optional<Embedding> embed(const ColoredGraph& atom, const Graph& target);
bool is_valid_embedding(const ColoredGraph& atom, const Graph& target, const Embedding& e);

enum class BoundOutcome {
    UpperBound,   ///< no atom embeds, so z(g) <= t - 1
    Inconclusive, ///< some atom embeds; nothing follows about z(g)
};

struct BoundVerdict {
    BoundOutcome outcome = BoundOutcome::Inconclusive;
    int t = 0;
    int bound = 0; ///< t - 1 when outcome is UpperBound
    std::vector<std::size_t> refuted; ///< atoms confirmed not to embed
    std::optional<std::size_t> atom_index;
    std::optional<Embedding> embedding;
};

/// Throws std::invalid_argument when catalog.t != t or when a
/// triangle-free catalog is used on a graph with a triangle.
BoundVerdict prove_upper_bound(const Graph& g, int t, const AtomCatalog& catalog);
std::string serialize_bound_verdict(const BoundVerdict& v);

} // namespace zcolor
