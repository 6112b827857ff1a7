#include "zcolor/atoms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zcolor/oracle.hpp"
#include "zcolor/verify.hpp"

namespace zcolor {

namespace {

// Restricted growth strings over `length` positions where a position may
// also take one of `fixed` pre-existing targets. Values 0..fixed-1 name a
// fixed target, fixed + b names fresh block b; blocks appear in order.
template <class Visit>
void for_each_assignment(int length, int fixed, Visit&& visit)
{
    std::vector<int> value(length, 0);
    auto rec = [&](auto&& self, int pos, int blocks) -> void {
        if (pos == length) {
            visit(value, blocks);
            return;
        }
        for (int v = 0; v < fixed + blocks + 1; ++v) {
            value[pos] = v;
            self(self, pos + 1, std::max(blocks, v - fixed + 1));
        }
    };
    rec(rec, 0, 0);
}

bool class_is_grundy(const Graph& g, const Coloring& c, Color k)
{
    for (Vertex v = 0; v < g.n(); ++v) {
        if (c[v] != k)
            continue;
        std::vector<char> seen(k, 0);
        for (Vertex w : g.neighbors(v))
            if (c[w] < k)
                seen[c[w]] = 1;
        for (Color i = 1; i < k; ++i)
            if (!seen[i])
                return false;
    }
    return true;
}

bool share_neighbor(const Graph& g, Vertex a, Vertex b)
{
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
        if (na[i] == nb[j])
            return true;
        if (na[i] < nb[j])
            ++i;
        else
            ++j;
    }
    return false;
}

void check_t(int t, const AtomOptions& options, bool triangle_free, int max_for_full)
{
    if (t < 0)
        throw std::invalid_argument("t must be non-negative");
    if (options.allow_large)
        return;
    if (t > options.max_t)
        throw AtomLimitError("t = " + std::to_string(t) + " exceeds the configured maximum " +
                             std::to_string(options.max_t) + "; pass allow_large to override");
    if (t > max_for_full && !triangle_free)
        throw AtomLimitError("the full catalog at t = " + std::to_string(t) +
                             " needs allow_large; use the triangle-free catalog instead");
}

} // namespace

bool satisfies_club(const ColoredGraph& cg, int t)
{
    const auto& g = cg.graph;
    const auto& c = cg.coloring;
    for (Vertex p = 1; p < t; ++p) {
        std::vector<char> seen(t + 2, 0);
        for (Vertex w : g.neighbors(p))
            if (c[w] <= t + 1)
                seen[c[w]] = 1;
        for (Color l = p + 1; l <= t; ++l)
            if (!seen[l])
                return false;
    }
    return true;
}

std::vector<Atom> phase1_generate(int t, const AtomOptions& options, bool triangle_free)
{
    check_t(t, options, true, options.max_t);

    // Star S_{1,t}: center 0 with color t+1, leaf u_p is vertex p.
    std::vector<Edge> star_edges;
    std::vector<Color> star_colors{t + 1};
    for (int p = 1; p <= t; ++p) {
        star_edges.emplace_back(0, p);
        star_colors.push_back(p);
    }
    std::vector<Vertex> star;
    for (int p = 1; p <= t; ++p)
        star.push_back(p);
    star.push_back(0);

    std::vector<Atom> out;
    std::set<std::string> seen;
    std::vector<Edge> edges = star_edges;
    std::vector<Color> colors = star_colors;
    Provenance prov;

    auto rec = [&](auto&& self, int j) -> void {
        if (j > t) {
            Atom a;
            a.cg.graph = Graph(static_cast<int>(colors.size()), edges);
            a.cg.coloring = Coloring(colors);
            a.cg.dominating_star = star;
            a.provenance = prov;
            if (!satisfies_club(a.cg, t))
                throw std::logic_error("phase I output violates the club condition");
            if (seen.insert(colored_canonical_form(a.cg)).second)
                out.push_back(std::move(a));
            return;
        }
        // u_1..u_{j-1} each get a color-j neighbor: u_j (value 0) or a
        // fresh vertex (value 1 + block).
        for_each_assignment(j - 1, 1, [&](const std::vector<int>& value, int blocks) {
            if (triangle_free && std::find(value.begin(), value.end(), 0) != value.end())
                return; // u_p u_j plus the center closes a triangle
            const std::size_t edges_before = edges.size();
            const std::size_t colors_before = colors.size();
            const Vertex first_fresh = static_cast<Vertex>(colors.size());
            for (int b = 0; b < blocks; ++b)
                colors.push_back(j);
            std::vector<Vertex> targets;
            for (int p = 1; p < j; ++p) {
                Vertex target = value[p - 1] == 0 ? j : first_fresh + value[p - 1] - 1;
                edges.emplace_back(p, target);
                targets.push_back(target);
            }
            prov.phase1_fresh.push_back(blocks);
            prov.phase1_targets.push_back(targets);
            self(self, j + 1);
            prov.phase1_fresh.pop_back();
            prov.phase1_targets.pop_back();
            edges.resize(edges_before);
            colors.resize(colors_before);
        });
    };
    rec(rec, 2);

    // Each non-star edge is the only color-j neighbor of its leaf, so the
    // club condition is edge-minimal; confirm it.
    for (const auto& a : out) {
        for (auto [u, v] : a.cg.graph.edges()) {
            if (u == 0)
                continue;
            ColoredGraph less{a.cg.graph.without_edge(u, v), a.cg.coloring, a.cg.dominating_star};
            if (satisfies_club(less, t))
                throw std::logic_error("phase I output is not edge-minimal for the club condition");
        }
    }
    return out;
}

std::vector<Atom> grundify(const Atom& atom, Color k, bool triangle_free)
{
    const Graph& g = atom.cg.graph;
    const Coloring& c = atom.cg.coloring;
    if (k < 2 || k >= c.k())
        throw std::out_of_range("grundify needs 2 <= k < number of colors");
    if (class_is_grundy(g, c, k))
        return {atom};

    const int n = g.n();
    const auto classes = c.classes();
    // Per lower color i: the class-k vertices missing color i, and every
    // admissible way of giving each of them a color-i neighbor.
    struct Option {
        std::vector<int> value;
        int blocks;
    };
    std::vector<std::vector<Vertex>> missing(k);
    std::vector<std::vector<Option>> options(k);
    for (Color i = 1; i < k; ++i) {
        for (Vertex v : classes[k - 1]) {
            bool has = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                   [&](Vertex w) { return c[w] == i; });
            if (!has)
                missing[i].push_back(v);
        }
        const auto& existing = classes[i - 1];
        const int fixed = static_cast<int>(existing.size());
        for_each_assignment(static_cast<int>(missing[i].size()), fixed,
                            [&](const std::vector<int>& value, int blocks) {
                                if (triangle_free)
                                    for (std::size_t p = 0; p < value.size(); ++p)
                                        if (value[p] < fixed && share_neighbor(g, missing[i][p], existing[value[p]]))
                                            return;
                                options[i].push_back({value, blocks});
                            });
    }

    std::vector<Atom> out;
    std::set<std::string> seen;
    std::vector<Edge> extra;
    std::vector<Color> fresh_colors;
    std::vector<GrundifyChoice> choices;

    auto rec = [&](auto&& self, Color i) -> void {
        if (i == k) {
            Atom a;
            a.cg.graph = g.with_vertices_and_edges(static_cast<int>(fresh_colors.size()), extra);
            if (triangle_free && a.cg.graph.has_triangle())
                return;
            std::vector<Color> colors = c.colors();
            colors.insert(colors.end(), fresh_colors.begin(), fresh_colors.end());
            a.cg.coloring = Coloring(std::move(colors));
            a.cg.dominating_star = atom.cg.dominating_star;
            a.provenance = atom.provenance;
            a.provenance.phase2.insert(a.provenance.phase2.end(), choices.begin(), choices.end());
            if (seen.insert(colored_canonical_form(a.cg)).second)
                out.push_back(std::move(a));
            return;
        }
        if (missing[i].empty()) {
            self(self, i + 1);
            return;
        }
        const auto& existing = classes[i - 1];
        const int fixed = static_cast<int>(existing.size());
        for (const auto& opt : options[i]) {
            const std::size_t extra_before = extra.size();
            const std::size_t fresh_before = fresh_colors.size();
            const Vertex first_fresh = n + static_cast<Vertex>(fresh_colors.size());
            for (int b = 0; b < opt.blocks; ++b)
                fresh_colors.push_back(i);
            GrundifyChoice choice;
            choice.k = k;
            choice.i = i;
            choice.fresh = opt.blocks;
            for (std::size_t p = 0; p < opt.value.size(); ++p) {
                Vertex v = missing[i][p];
                if (opt.value[p] < fixed) {
                    extra.emplace_back(v, existing[opt.value[p]]);
                    choice.attached.push_back(v);
                    choice.attached_to.push_back(existing[opt.value[p]]);
                } else {
                    Vertex w = first_fresh + opt.value[p] - fixed;
                    extra.emplace_back(v, w);
                    choice.unattached.push_back(v);
                    choice.fresh_of.push_back(w);
                }
            }
            choices.push_back(std::move(choice));
            self(self, i + 1);
            choices.pop_back();
            extra.resize(extra_before);
            fresh_colors.resize(fresh_before);
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<ColoredGraph> grundify(const ColoredGraph& cg, Color k)
{
    std::vector<ColoredGraph> out;
    for (auto& a : grundify(Atom{cg, {}}, k, false))
        out.push_back(std::move(a.cg));
    return out;
}

AtomCatalog generate_atoms(int t, bool triangle_free, const AtomOptions& options)
{
    if (t < 1)
        throw std::invalid_argument("generate_atoms needs t >= 1");
    check_t(t, options, triangle_free, 3);

    AtomCatalog catalog;
    catalog.t = t;
    catalog.triangle_free = triangle_free;

    AtomOptions phase1_options = options;
    phase1_options.allow_large = true;
    std::vector<Atom> family = phase1_generate(t - 1, phase1_options, triangle_free);
    for (Color k = t - 1; k >= 2; --k) {
        std::vector<Atom> next;
        std::set<std::string> seen;
        for (const auto& a : family)
            for (auto& b : grundify(a, k, triangle_free))
                if (seen.insert(colored_canonical_form(b.cg)).second)
                    next.push_back(std::move(b));
        family = std::move(next);
    }

    std::vector<std::pair<std::string, Atom>> kept;
    for (auto& a : family) {
        const Graph& g = a.cg.graph;
        const Coloring& c = a.cg.coloring;
        if (triangle_free && g.has_triangle())
            continue;
        if (c.k() != t || !check_z(g, c).pass || !is_dominating_star(g, c, *a.cg.dominating_star))
            continue;
        bool minimal = true;
        for (auto [u, v] : g.edges())
            if (has_z_coloring_at_least(g.without_edge(u, v), t)) {
                minimal = false;
                break;
            }
        if (!minimal) {
            ++catalog.removed_by_minimality;
            continue;
        }
        kept.emplace_back(colored_canonical_form(a.cg), std::move(a));
    }
    std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    kept.erase(std::unique(kept.begin(), kept.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
               kept.end());
    for (auto& [cert, a] : kept)
        catalog.atoms.push_back(std::move(a));
    return catalog;
}

// ---------------------------------------------------------------------------
// Catalog files

namespace {

nlohmann::ordered_json provenance_json(const Provenance& p)
{
    nlohmann::ordered_json out;
    nlohmann::ordered_json phase1;
    phase1["m"] = p.phase1_fresh;
    phase1["f"] = p.phase1_targets;
    out["phase1"] = phase1;
    auto phase2 = nlohmann::ordered_json::array();
    for (const auto& ch : p.phase2) {
        nlohmann::ordered_json item;
        item["k"] = ch.k;
        item["i"] = ch.i;
        item["S"] = ch.attached;
        item["f"] = ch.attached_to;
        item["m"] = ch.fresh;
        item["rest"] = ch.unattached;
        item["g"] = ch.fresh_of;
        phase2.push_back(item);
    }
    out["phase2"] = phase2;
    return out;
}

Provenance provenance_from_json(const nlohmann::json& j)
{
    Provenance p;
    p.phase1_fresh = j.at("phase1").at("m").get<std::vector<int>>();
    p.phase1_targets = j.at("phase1").at("f").get<std::vector<std::vector<int>>>();
    for (const auto& item : j.at("phase2")) {
        GrundifyChoice ch;
        ch.k = item.at("k").get<int>();
        ch.i = item.at("i").get<int>();
        ch.attached = item.at("S").get<std::vector<int>>();
        ch.attached_to = item.at("f").get<std::vector<int>>();
        ch.fresh = item.at("m").get<int>();
        ch.unattached = item.at("rest").get<std::vector<int>>();
        ch.fresh_of = item.at("g").get<std::vector<int>>();
        p.phase2.push_back(std::move(ch));
    }
    return p;
}

} // namespace

std::string serialize_catalog(const AtomCatalog& catalog)
{
    std::ostringstream out;
    nlohmann::ordered_json header;
    header["catalog"] = "z-atoms";
    header["t"] = catalog.t;
    header["triangle_free"] = catalog.triangle_free;
    header["count"] = catalog.atoms.size();
    header["removed_by_minimality"] = catalog.removed_by_minimality;
    out << header.dump() << '\n';
    for (const auto& a : catalog.atoms) {
        nlohmann::ordered_json rec;
        rec["t"] = catalog.t;
        rec["n"] = a.cg.graph.n();
        auto edges = nlohmann::ordered_json::array();
        for (auto [u, v] : a.cg.graph.edges())
            edges.push_back({u, v});
        rec["edges"] = edges;
        rec["colors"] = a.cg.coloring.colors();
        rec["dominating_star"] = a.cg.dominating_star.value_or(std::vector<Vertex>{});
        rec["provenance"] = provenance_json(a.provenance);
        out << rec.dump() << '\n';
    }
    return out.str();
}

AtomCatalog parse_catalog(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    AtomCatalog catalog;
    bool have_header = false;
    std::size_t declared = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("catalog record is not valid JSON: ") + e.what(), lineno);
        }
        try {
            if (!have_header) {
                if (rec.value("catalog", "") != "z-atoms")
                    throw ParseError("missing catalog header", lineno);
                catalog.t = rec.at("t").get<int>();
                catalog.triangle_free = rec.at("triangle_free").get<bool>();
                declared = rec.at("count").get<std::size_t>();
                catalog.removed_by_minimality = rec.value("removed_by_minimality", 0);
                have_header = true;
                continue;
            }
            if (rec.at("t").get<int>() != catalog.t)
                throw ParseError("atom t differs from the catalog header", lineno);
            std::vector<Edge> es;
            for (const auto& e : rec.at("edges"))
                es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            Atom a;
            a.cg.graph = Graph(rec.at("n").get<int>(), es);
            a.cg.coloring = Coloring(rec.at("colors").get<std::vector<int>>());
            if (a.cg.coloring.size() != a.cg.graph.n())
                throw ParseError("colors length differs from n", lineno);
            a.cg.dominating_star = rec.at("dominating_star").get<std::vector<int>>();
            a.provenance = provenance_from_json(rec.at("provenance"));
            catalog.atoms.push_back(std::move(a));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed catalog record: ") + e.what(), lineno);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("malformed catalog record: ") + e.what(), lineno);
        }
    }
    if (!have_header)
        throw ParseError("empty catalog");
    if (declared != catalog.atoms.size())
        throw ParseError("catalog header count differs from the number of atoms");
    return catalog;
}

// ---------------------------------------------------------------------------
// Embedding

namespace {

class DenseAdjacency {
public:
    explicit DenseAdjacency(const Graph& g) : n_(g.n()), words_((g.n() + 63) / 64), bits_(n_ * words_, 0)
    {
        for (auto [u, v] : g.edges()) {
            set(u, v);
            set(v, u);
        }
    }
    bool has(Vertex u, Vertex v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u; }

private:
    void set(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace

std::optional<Embedding> embed(const ColoredGraph& atom, const Graph& target)
{
    const Graph& h = atom.graph;
    const Coloring& c = atom.coloring;
    const int nh = h.n();
    const int ng = target.n();
    if (nh > ng)
        return std::nullopt;
    if (nh == 0)
        return Embedding{};

    // Atom vertices in breadth-first order from the highest degree vertex
    // of each component, so each one (but a component root) has an
    // already-placed neighbor to draw candidates from.
    std::vector<Vertex> order;
    std::vector<int> position(nh, -1);
    while (static_cast<int>(order.size()) < nh) {
        Vertex root = -1;
        for (Vertex v = 0; v < nh; ++v)
            if (position[v] < 0 && (root < 0 || h.degree(v) > h.degree(root)))
                root = v;
        std::size_t head = order.size();
        position[root] = static_cast<int>(order.size());
        order.push_back(root);
        while (head < order.size()) {
            Vertex v = order[head++];
            std::vector<Vertex> next;
            for (Vertex w : h.neighbors(v))
                if (position[w] < 0)
                    next.push_back(w);
            std::stable_sort(next.begin(), next.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
            for (Vertex w : next) {
                position[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<Vertex>> earlier_nbrs(nh), earlier_same(nh);
    for (int p = 0; p < nh; ++p) {
        Vertex x = order[p];
        for (Vertex w : h.neighbors(x))
            if (position[w] < p)
                earlier_nbrs[p].push_back(w);
        for (int q = 0; q < p; ++q)
            if (c[order[q]] == c[x])
                earlier_same[p].push_back(order[q]);
    }

    DenseAdjacency adj(target);
    std::vector<Vertex> map(nh, -1);
    std::vector<char> used(ng, 0);

    auto fits = [&](int p, Vertex y) {
        const Vertex x = order[p];
        if (used[y] || target.degree(y) < h.degree(x))
            return false;
        for (Vertex w : earlier_nbrs[p])
            if (!adj.has(y, map[w]))
                return false;
        for (Vertex w : earlier_same[p])
            if (adj.has(y, map[w]))
                return false;
        return true;
    };

    auto rec = [&](auto&& self, int p) -> bool {
        if (p == nh)
            return true;
        const Vertex x = order[p];
        auto try_vertex = [&](Vertex y) {
            if (!fits(p, y))
                return false;
            map[x] = y;
            used[y] = 1;
            if (self(self, p + 1))
                return true;
            used[y] = 0;
            map[x] = -1;
            return false;
        };
        if (!earlier_nbrs[p].empty()) {
            for (Vertex y : target.neighbors(map[earlier_nbrs[p].front()]))
                if (try_vertex(y))
                    return true;
        } else {
            for (Vertex y = 0; y < ng; ++y)
                if (try_vertex(y))
                    return true;
        }
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;
    return Embedding{map};
}

bool is_valid_embedding(const ColoredGraph& atom, const Graph& target, const Embedding& e)
{
    const Graph& h = atom.graph;
    if (static_cast<int>(e.map.size()) != h.n())
        return false;
    std::set<Vertex> image;
    for (Vertex y : e.map) {
        if (y < 0 || y >= target.n() || !image.insert(y).second)
            return false;
    }
    for (auto [u, v] : h.edges())
        if (!target.has_edge(e.map[u], e.map[v]))
            return false;
    for (Vertex u = 0; u < h.n(); ++u)
        for (Vertex v = u + 1; v < h.n(); ++v)
            if (atom.coloring[u] == atom.coloring[v] && target.has_edge(e.map[u], e.map[v]))
                return false;
    return true;
}

BoundVerdict prove_upper_bound(const Graph& g, int t, const AtomCatalog& catalog)
{
    if (catalog.t != t)
        throw std::invalid_argument("catalog is for t = " + std::to_string(catalog.t) + ", not " + std::to_string(t));
    if (catalog.triangle_free && g.has_triangle())
        throw std::invalid_argument("a triangle-free catalog cannot bound a graph that contains a triangle");
    BoundVerdict out;
    out.t = t;
    for (std::size_t i = 0; i < catalog.atoms.size(); ++i) {
        if (auto e = embed(catalog.atoms[i].cg, g)) {
            if (!is_valid_embedding(catalog.atoms[i].cg, g, *e))
                throw std::logic_error("embedding search returned an invalid map");
            out.outcome = BoundOutcome::Inconclusive;
            out.atom_index = i;
            out.embedding = std::move(e);
            return out;
        }
        out.refuted.push_back(i);
    }
    out.outcome = BoundOutcome::UpperBound;
    out.bound = t - 1;
    return out;
}

std::string serialize_bound_verdict(const BoundVerdict& v)
{
    nlohmann::ordered_json out;
    out["outcome"] = v.outcome == BoundOutcome::UpperBound ? "upper_bound" : "inconclusive";
    out["t"] = v.t;
    if (v.outcome == BoundOutcome::UpperBound)
        out["z_at_most"] = v.bound;
    out["refuted"] = v.refuted;
    if (v.atom_index)
        out["atom"] = *v.atom_index;
    if (v.embedding)
        out["embedding"] = v.embedding->map;
    return out.dump() + "\n";
}

} // namespace zcolor
