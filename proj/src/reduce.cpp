#include "zcolor/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "zcolor/verify.hpp"

namespace zcolor {

void ReductionTrace::append(const ReductionTrace& other)
{
    moves.insert(moves.end(), other.moves.begin(), other.moves.end());
    class_deletions.insert(class_deletions.end(), other.class_deletions.begin(), other.class_deletions.end());
    iterations += other.iterations;
}

namespace {

// Scratch set of colors seen around one vertex, reset in O(1).
class ColorMarks {
public:
    explicit ColorMarks(int capacity) : stamp_(capacity + 2, 0) {}

    void reset(int capacity)
    {
        if (static_cast<int>(stamp_.size()) < capacity + 2)
            stamp_.resize(capacity + 2, 0);
        ++epoch_;
    }
    void mark(Color c)
    {
        if (c >= 0 && c < static_cast<int>(stamp_.size()))
            stamp_[c] = epoch_;
    }
    bool has(Color c) const { return c < static_cast<int>(stamp_.size()) && stamp_[c] == epoch_; }

private:
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 1;
};

void require_size(const Graph& g, const Coloring& c)
{
    if (c.size() != g.n())
        throw std::invalid_argument("coloring size differs from vertex count");
}

} // namespace

Coloring greedy_coloring(const Graph& g, const std::vector<Vertex>& order)
{
    const int n = g.n();
    std::vector<Vertex> seq = order;
    if (seq.empty()) {
        seq.resize(n);
        std::iota(seq.begin(), seq.end(), 0);
    }
    if (static_cast<int>(seq.size()) != n)
        throw std::invalid_argument("seed order is not a permutation of the vertices");
    std::vector<char> seen(n, 0);
    for (Vertex v : seq) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("seed order is not a permutation of the vertices");
        seen[v] = 1;
    }
    std::vector<Color> colors(n, 0);
    ColorMarks marks(g.max_degree() + 1);
    for (Vertex v : seq) {
        marks.reset(g.max_degree() + 1);
        for (Vertex w : g.neighbors(v))
            marks.mark(colors[w]);
        Color c = 1;
        while (marks.has(c))
            ++c;
        colors[v] = c;
    }
    return Coloring(std::move(colors));
}

Reduced<Coloring> grundy_reduce(const Graph& g, const Coloring& c)
{
    require_size(g, c);
    if (!check_proper(g, c).pass)
        throw std::invalid_argument("grundy_reduce needs a proper coloring");

    const int n = g.n();
    const auto buckets = c.classes();
    const int original_k = c.k();
    std::vector<Color> colors(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (c[v] == 1)
            colors[v] = 1;

    ReductionTrace trace;
    ColorMarks marks(original_k);
    int deleted = 0;
    // Vertices only ever move into classes that were already scanned, so
    // the members of the class under scan are its original members.
    for (int orig = 2; orig <= original_k; ++orig) {
        const Color i = orig - deleted;
        int remaining = 0;
        for (Vertex v : buckets[orig - 1]) {
            marks.reset(original_k);
            for (Vertex w : g.neighbors(v))
                if (c[w] < orig)
                    marks.mark(colors[w]);
            Color j = 1;
            while (j < i && marks.has(j))
                ++j;
            if (j < i) {
                colors[v] = j;
                trace.moves.push_back({v, i, j});
            } else {
                colors[v] = i;
                ++remaining;
            }
        }
        if (remaining == 0) {
            trace.class_deletions.push_back(i);
            ++deleted;
        }
    }
    if (n == 0)
        return {Coloring(), trace};
    return {Coloring(std::move(colors)).normalized(), trace};
}

Reduced<Coloring> cd_gcd_transform(const Graph& g, const Coloring& c)
{
    require_size(g, c);
    if (!check_grundy(g, c).pass)
        throw std::invalid_argument("cd_gcd_transform needs a Grundy coloring");

    const int n = g.n();
    std::vector<Color> colors = c.colors();
    const auto buckets = c.classes();
    int t = c.k();
    ReductionTrace trace;
    ColorMarks marks(t);

    // Classes t and t-1 of a Grundy coloring always hold a CD vertex, and
    // dissolving a class never costs a higher class its CD vertex, so one
    // top-down sweep suffices. Lower classes keep their indices and members.
    for (Color j = t - 2; j >= 1; --j) {
        const auto& members = buckets[j - 1];
        bool has_cd = false;
        for (Vertex v : members) {
            marks.reset(t);
            int distinct = 0;
            for (Vertex w : g.neighbors(v))
                if (!marks.has(colors[w])) {
                    marks.mark(colors[w]);
                    ++distinct;
                }
            if (distinct == t - 1) {
                has_cd = true;
                break;
            }
        }
        if (has_cd)
            continue;

        for (Vertex v : members) {
            marks.reset(t);
            for (Vertex w : g.neighbors(v))
                marks.mark(colors[w]);
            Color target = j + 1;
            while (target <= t && marks.has(target))
                ++target;
            if (target > t)
                throw std::logic_error("vertex without CD status sees every higher class");
            colors[v] = target;
            trace.moves.push_back({v, j, target});
        }
        for (Vertex v = 0; v < n; ++v)
            if (colors[v] > j)
                --colors[v];
        trace.class_deletions.push_back(j);
        --t;
    }
    return {Coloring(std::move(colors)), trace};
}

Reduced<Coloring> z_transform(const Graph& g, const Coloring& c)
{
    require_size(g, c);
    if (!check_grundy(g, c).pass || !check_cd(g, c).pass)
        throw std::invalid_argument("z_transform needs a Grundy and color-dominating coloring");

    const int n = g.n();
    Coloring current = c;
    ReductionTrace trace;
    const long long cap = static_cast<long long>(n) * n + n + 1;

    while (true) {
        const int t = current.k();
        std::vector<Vertex> top;
        for (Vertex v = 0; v < n; ++v)
            if (current[v] == t)
                top.push_back(v);
        if (top.empty() || std::any_of(top.begin(), top.end(), [&](Vertex v) { return is_nice_vertex(g, current, v); }))
            break;
        if (++trace.iterations > cap)
            throw std::logic_error("z_transform failed to terminate");

        std::vector<char> cd(n, 0);
        for (Color i = 1; i <= t; ++i)
            for (Vertex v : dominating_vertices(g, current, i))
                cd[v] = 1;

        const Vertex u = top.front();
        std::vector<char> seen(t + 1, 0);
        for (Vertex w : g.neighbors(u))
            if (cd[w])
                seen[current[w]] = 1;
        Color iu = 1;
        while (iu < t && seen[iu])
            ++iu;
        if (iu >= t)
            throw std::logic_error("top vertex is nice after all");

        std::vector<Color> colors = current.colors();
        std::vector<std::pair<Vertex, Color>> recolor;
        for (Vertex w : g.neighbors(u)) {
            if (current[w] != iu)
                continue;
            std::vector<char> around(t + 2, 0);
            for (Vertex x : g.neighbors(w))
                around[current[x]] = 1;
            Color jw = 1;
            while (jw == iu || around[jw])
                ++jw;
            if (jw <= iu || jw >= t)
                throw std::logic_error("recoloring color outside (i(u), t)");
            recolor.emplace_back(w, jw);
        }
        colors[u] = iu;
        trace.moves.push_back({u, t, iu});
        for (auto [w, jw] : recolor) {
            colors[w] = jw;
            trace.moves.push_back({w, iu, jw});
        }

        auto grundy = grundy_reduce(g, Coloring(std::move(colors)));
        auto gcd = cd_gcd_transform(g, grundy.coloring);
        trace.moves.insert(trace.moves.end(), grundy.trace.moves.begin(), grundy.trace.moves.end());
        trace.moves.insert(trace.moves.end(), gcd.trace.moves.begin(), gcd.trace.moves.end());
        trace.class_deletions.insert(trace.class_deletions.end(), grundy.trace.class_deletions.begin(),
                                     grundy.trace.class_deletions.end());
        trace.class_deletions.insert(trace.class_deletions.end(), gcd.trace.class_deletions.begin(),
                                     gcd.trace.class_deletions.end());
        current = std::move(gcd.coloring);
    }
    return {current, trace};
}

Reduced<Coloring> z_heuristic(const Graph& g, const std::vector<Vertex>& seed_order)
{
    Coloring start = greedy_coloring(g, seed_order);
    auto grundy = grundy_reduce(g, start);
    auto gcd = cd_gcd_transform(g, grundy.coloring);
    auto z = z_transform(g, gcd.coloring);
    ReductionTrace trace = grundy.trace;
    trace.append(gcd.trace);
    trace.append(z.trace);
    return {z.coloring, trace};
}

std::optional<std::vector<Vertex>> find_dominating_star(const Graph& g, const Coloring& c)
{
    auto verdict = check_z(g, c);
    if (!verdict.pass)
        return std::nullopt;
    return verdict.witness;
}

ComplementaryResult complementary(const Graph& g, const Coloring& c, std::int64_t budget, std::uint64_t rng_seed)
{
    if (budget <= 0)
        throw std::invalid_argument("complementary needs a positive tuple budget");
    if (!check_z(g, c).pass)
        throw std::invalid_argument("complementary needs a z-coloring");

    const int n = g.n();
    const auto classes = c.classes();
    const int t = c.k();
    ComplementaryResult result{c.normalized(), 0, false};
    if (n == 0)
        return result;

    std::int64_t product = 1;
    for (const auto& cls : classes) {
        if (product > budget / static_cast<std::int64_t>(cls.size())) {
            product = budget + 1;
            break;
        }
        product *= static_cast<std::int64_t>(cls.size());
    }
    result.exhaustive = product <= budget;

    std::vector<Vertex> order;
    for (const auto& cls : classes)
        order.insert(order.end(), cls.begin(), cls.end());
    order.push_back(n);

    auto evaluate = [&](const std::vector<Vertex>& tuple) {
        std::vector<Edge> extra;
        for (Vertex v : tuple)
            extra.emplace_back(n, v);
        Graph augmented = g.with_vertices_and_edges(1, extra);
        auto run = z_heuristic(augmented, order);
        std::vector<Color> restricted(run.coloring.colors().begin(), run.coloring.colors().begin() + n);
        Coloring candidate = Coloring(std::move(restricted)).normalized();
        ++result.tuples_tried;
        if (candidate.k() < result.coloring.k())
            result.coloring = std::move(candidate);
    };

    std::vector<Vertex> tuple(t);
    if (result.exhaustive) {
        std::vector<std::size_t> idx(t, 0);
        while (true) {
            for (int i = 0; i < t; ++i)
                tuple[i] = classes[i][idx[i]];
            evaluate(tuple);
            int pos = t - 1;
            while (pos >= 0 && ++idx[pos] == classes[pos].size())
                idx[pos--] = 0;
            if (pos < 0)
                break;
        }
    } else {
        std::mt19937_64 rng(rng_seed);
        for (std::int64_t s = 0; s < budget; ++s) {
            for (int i = 0; i < t; ++i) {
                std::uniform_int_distribution<std::size_t> pick(0, classes[i].size() - 1);
                tuple[i] = classes[i][pick(rng)];
            }
            evaluate(tuple);
        }
    }
    return result;
}

IteratedResult iterated_z(const Graph& g, int rounds, std::uint64_t rng_seed)
{
    if (rounds < 1)
        throw std::invalid_argument("iterated_z needs at least one round");
    IteratedResult out;
    Coloring previous = z_heuristic(g).coloring;
    out.best = previous;
    out.round_colors.push_back(previous.k());
    out.running_best.push_back(previous.k());

    std::mt19937_64 rng(rng_seed);
    for (int r = 2; r <= rounds; ++r) {
        auto classes = previous.classes();
        std::vector<int> perm(classes.size());
        std::iota(perm.begin(), perm.end(), 0);
        if (r == 2)
            std::reverse(perm.begin(), perm.end());
        else
            std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Vertex> order;
        for (int p : perm)
            order.insert(order.end(), classes[p].begin(), classes[p].end());
        previous = z_heuristic(g, order).coloring;
        out.round_colors.push_back(previous.k());
        if (previous.k() < out.best.k())
            out.best = previous;
        out.running_best.push_back(out.best.k());
    }
    return out;
}

} // namespace zcolor
