#include "zcolor/graph.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace zcolor {

ParseError::ParseError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                        std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        total += nb.size();
    }
    m_ = static_cast<int>(total / 2);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& nb : adj_)
        d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const
{
    auto es = edges();
    if (u > v)
        std::swap(u, v);
    std::erase(es, Edge{u, v});
    return Graph(n(), es);
}

Graph Graph::with_vertices_and_edges(int extra, std::span<const Edge> more) const
{
    auto es = edges();
    es.insert(es.end(), more.begin(), more.end());
    return Graph(n() + extra, es);
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> index(n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges())
        if (index[u] >= 0 && index[v] >= 0)
            es.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), es);
}

bool Graph::is_connected() const
{
    if (n() == 0)
        return true;
    std::vector<char> seen(n(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n();
}

bool Graph::has_triangle() const
{
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (v > u)
                for (Vertex w : adj_[v])
                    if (w > v && has_edge(u, w))
                        return true;
    return false;
}

bool Graph::has_induced_p5() const
{
    // Extend induced paths one vertex at a time from every start vertex.
    std::vector<Vertex> path;
    auto extend = [&](auto&& self) -> bool {
        if (path.size() == 5)
            return true;
        Vertex last = path.back();
        for (Vertex w : adj_[last]) {
            bool ok = true;
            for (std::size_t i = 0; i + 1 < path.size() && ok; ++i)
                if (path[i] == w || has_edge(path[i], w))
                    ok = false;
            if (!ok || w == last)
                continue;
            path.push_back(w);
            if (self(self))
                return true;
            path.pop_back();
        }
        return false;
    };
    for (Vertex s = 0; s < n(); ++s) {
        path.assign(1, s);
        if (extend(extend))
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Coloring

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors))
{
    for (Color c : colors_) {
        if (c < 1)
            throw std::invalid_argument("colors are 1-based; got " + std::to_string(c));
        k_ = std::max(k_, c);
    }
}

Coloring::Coloring(std::initializer_list<Color> colors) : Coloring(std::vector<Color>(colors)) {}

bool Coloring::is_normalized() const
{
    std::vector<char> used(k_ + 1, 0);
    for (Color c : colors_)
        used[c] = 1;
    return std::all_of(used.begin() + 1, used.end(), [](char u) { return u != 0; });
}

Coloring Coloring::normalized() const
{
    std::vector<Color> remap(k_ + 1, 0);
    for (Color c : colors_)
        remap[c] = 1;
    Color next = 0;
    for (Color c = 1; c <= k_; ++c)
        if (remap[c])
            remap[c] = ++next;
    std::vector<Color> out(colors_.size());
    for (std::size_t v = 0; v < colors_.size(); ++v)
        out[v] = remap[colors_[v]];
    return Coloring(std::move(out));
}

std::vector<std::vector<Vertex>> Coloring::classes() const
{
    std::vector<std::vector<Vertex>> out(k_);
    for (Vertex v = 0; v < size(); ++v)
        out[colors_[v] - 1].push_back(v);
    return out;
}

Coloring coloring_from_classes(int n, const std::vector<std::vector<Vertex>>& classes)
{
    std::vector<Color> colors(n, 0);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i])
            colors[v] = static_cast<Color>(i + 1);
    return Coloring(std::move(colors));
}

// ---------------------------------------------------------------------------
// DIMACS

namespace {

std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

long parse_int(const std::string& tok, int line)
{
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
    if (tok.size() > 9)
        throw ParseError("integer too large: '" + tok + "'", line);
    return std::stol(tok);
}

} // namespace

DimacsDocument read_dimacs(const std::string& text)
{
    DimacsDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto toks = split_ws(line);
        if (toks.empty())
            continue;
        const std::string& tag = toks[0];
        if (tag == "c") {
            auto pos = line.find('c');
            std::string body = line.substr(pos + 1);
            if (!body.empty() && body.front() == ' ')
                body.erase(0, 1);
            doc.comments.push_back(body);
        } else if (tag == "p") {
            if (n >= 0)
                throw ParseError("duplicate problem line", lineno);
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError("malformed header, expected 'p edge <n> <m>'", lineno);
            n = parse_int(toks[2], lineno);
            parse_int(toks[3], lineno);
        } else if (tag == "e") {
            if (n < 0)
                throw ParseError("edge line before problem line", lineno);
            if (toks.size() != 3)
                throw ParseError("malformed edge line, expected 'e <u> <v>'", lineno);
            long u = parse_int(toks[1], lineno);
            long v = parse_int(toks[2], lineno);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("vertex index out of range", lineno);
            if (u == v)
                throw ParseError("self-loop on vertex " + std::to_string(u), lineno);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError("unknown line type '" + tag + "'", lineno);
        }
    }
    if (n < 0)
        throw ParseError("missing 'p edge' header");
    doc.graph = Graph(static_cast<int>(n), edges);
    return doc;
}

Graph parse_dimacs(const std::string& text) { return read_dimacs(text).graph; }

std::string write_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Coloring record

std::string serialize_coloring(const Graph& g, const Coloring& c, const std::optional<std::vector<Vertex>>& star)
{
    using nlohmann::ordered_json;
    ordered_json rec;
    rec["n"] = g.n();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    rec["edges"] = edges;
    rec["k"] = c.k();
    rec["colors"] = c.colors();
    rec["classes"] = c.classes();
    if (star)
        rec["dominating_star"] = *star;
    return rec.dump() + "\n";
}

std::string serialize_coloring(const ColoredGraph& cg)
{
    return serialize_coloring(cg.graph, cg.coloring, cg.dominating_star);
}

ColoringRecord parse_coloring_record(const std::string& text)
{
    nlohmann::json rec;
    try {
        rec = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("coloring record is not valid JSON: ") + e.what());
    }
    try {
        int n = rec.at("n").get<int>();
        auto edges = rec.at("edges").get<std::vector<std::vector<int>>>();
        std::vector<Edge> es;
        for (const auto& e : edges) {
            if (e.size() != 2)
                throw ParseError("edge entries must be pairs");
            es.emplace_back(e[0], e[1]);
        }
        ColoringRecord out;
        out.graph = Graph(n, es);
        auto colors = rec.at("colors").get<std::vector<int>>();
        if (static_cast<int>(colors.size()) != n)
            throw ParseError("colors length differs from n");
        out.coloring = Coloring(std::move(colors));
        if (rec.at("k").get<int>() != out.coloring.k())
            throw ParseError("k does not match the largest color");
        if (rec.contains("classes") &&
            rec.at("classes").get<std::vector<std::vector<int>>>() != out.coloring.classes())
            throw ParseError("classes disagree with colors");
        if (rec.contains("dominating_star"))
            out.dominating_star = rec.at("dominating_star").get<std::vector<int>>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed coloring record: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed coloring record: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Colored canonical form

namespace {

class Canonizer {
public:
    Canonizer(const Graph& g, const Coloring& c) : g_(g), c_(c), n_(g.n()) {}

    std::string run()
    {
        std::vector<std::pair<int, int>> seed(n_);
        for (Vertex v = 0; v < n_; ++v)
            seed[v] = {c_[v], g_.degree(v)};
        std::vector<int> cells(n_);
        rank_by(cells, [&](Vertex v) { return seed[v]; });
        std::vector<Vertex> prefix;
        search(cells, prefix);
        return encode(best_);
    }

private:
    // Assigns dense ranks 0..r-1 to vertices ordered by key(v).
    template <class Key>
    static int rank_by(std::vector<int>& cells, Key&& key)
    {
        const int n = static_cast<int>(cells.size());
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<decltype(key(0))> keys;
        keys.reserve(n);
        for (Vertex v = 0; v < n; ++v)
            keys.push_back(key(v));
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
        int r = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || keys[order[i]] != keys[order[i - 1]])
                ++r;
            cells[order[i]] = r;
        }
        return r + 1;
    }

    int refine(std::vector<int>& cells) const
    {
        std::vector<int> dense(n_);
        int count = rank_by(dense, [&](Vertex v) { return cells[v]; });
        cells.swap(dense);
        while (true) {
            std::vector<std::vector<int>> sig(n_);
            for (Vertex v = 0; v < n_; ++v) {
                sig[v].reserve(g_.degree(v) + 1);
                sig[v].push_back(cells[v]);
                std::vector<int> nb;
                for (Vertex w : g_.neighbors(v))
                    nb.push_back(cells[w]);
                std::sort(nb.begin(), nb.end());
                sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            }
            std::vector<int> next(n_);
            int c = rank_by(next, [&](Vertex v) { return sig[v]; });
            cells.swap(next);
            if (c == count)
                return c;
            count = c;
        }
    }

    std::vector<int> certificate(const std::vector<int>& label) const
    {
        std::vector<int> cert;
        cert.reserve(1 + n_ + 2 * g_.m());
        cert.push_back(n_);
        std::vector<Color> col(n_);
        for (Vertex v = 0; v < n_; ++v)
            col[label[v]] = c_[v];
        cert.insert(cert.end(), col.begin(), col.end());
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : g_.edges()) {
            int a = label[u], b = label[v];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        for (auto [a, b] : es) {
            cert.push_back(a);
            cert.push_back(b);
        }
        return cert;
    }

    void search(std::vector<int> cells, std::vector<Vertex>& prefix)
    {
        int count = refine(cells);
        if (count == n_) {
            auto cert = certificate(cells);
            if (!have_best_ || cert < best_) {
                best_ = std::move(cert);
                best_label_ = cells;
                have_best_ = true;
            } else if (cert == best_) {
                // best_label_^-1 o cells is an automorphism.
                std::vector<Vertex> inv(n_);
                for (Vertex v = 0; v < n_; ++v)
                    inv[best_label_[v]] = v;
                std::vector<Vertex> gamma(n_);
                for (Vertex v = 0; v < n_; ++v)
                    gamma[v] = inv[cells[v]];
                generators_.push_back(std::move(gamma));
            }
            return;
        }
        // First smallest non-singleton cell.
        std::vector<int> size(count, 0);
        for (int c : cells)
            ++size[c];
        int target = -1;
        for (int c = 0; c < count; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target]))
                target = c;
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n_; ++v)
            if (cells[v] == target)
                members.push_back(v);

        std::vector<Vertex> explored;
        for (Vertex v : members) {
            if (!explored.empty() && in_explored_orbit(v, explored, prefix))
                continue;
            std::vector<int> child(n_);
            for (Vertex u = 0; u < n_; ++u)
                child[u] = 2 * cells[u] + ((cells[u] == target && u != v) ? 1 : 0);
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    // Orbit test under the stored automorphisms that fix `prefix` pointwise.
    bool in_explored_orbit(Vertex v, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) const
    {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : generators_) {
            if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; }))
                continue;
            any = true;
            for (Vertex x = 0; x < n_; ++x)
                parent[find(x)] = find(gamma[x]);
        }
        if (!any)
            return false;
        int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == root; });
    }

    static std::string encode(const std::vector<int>& cert)
    {
        std::string out(cert.size() * 4, '\0');
        for (std::size_t i = 0; i < cert.size(); ++i) {
            auto x = static_cast<std::uint32_t>(cert[i]);
            out[4 * i] = static_cast<char>(x >> 24);
            out[4 * i + 1] = static_cast<char>(x >> 16);
            out[4 * i + 2] = static_cast<char>(x >> 8);
            out[4 * i + 3] = static_cast<char>(x);
        }
        return out;
    }

    const Graph& g_;
    const Coloring& c_;
    int n_;
    bool have_best_ = false;
    std::vector<int> best_;
    std::vector<int> best_label_;
    std::vector<std::vector<Vertex>> generators_;
};

} // namespace

std::string colored_canonical_form(const Graph& g, const Coloring& c)
{
    if (c.size() != g.n())
        throw std::invalid_argument("coloring size differs from vertex count");
    return Canonizer(g, c).run();
}

std::string colored_canonical_form(const ColoredGraph& cg) { return colored_canonical_form(cg.graph, cg.coloring); }

bool is_colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b)
{
    if (a.graph.n() != b.graph.n() || a.graph.m() != b.graph.m())
        return false;
    return colored_canonical_form(a) == colored_canonical_form(b);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        es.emplace_back(perm[u], perm[v]);
    return Graph(g.n(), es);
}

Coloring relabel(const Coloring& c, std::span<const Vertex> perm)
{
    std::vector<Color> out(c.size());
    for (Vertex v = 0; v < c.size(); ++v)
        out[perm[v]] = c[v];
    return Coloring(std::move(out));
}

} // namespace zcolor
