#include "zcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace zcolor {

namespace {

using Mask = std::uint64_t;

// Backtracking over color assignments with exactly k colors. Vertices are
// visited so that each one, where possible, touches already colored
// vertices; this closes neighborhoods early and lets the Grundy and
// color-dominating feasibility cuts fire high in the tree.
class ExactSearch {
public:
    ExactSearch(const Graph& g, Parameter p, int k) : g_(g), p_(p), k_(k), n_(g.n())
    {
        if (n_ > 64)
            throw OracleLimitError("exact search supports at most 64 vertices");
        nbr_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v))
                nbr_[v] |= Mask{1} << w;
        build_order();
        grundy_ = p == Parameter::Gamma || p == Parameter::Z;
        dominating_ = p == Parameter::B || p == Parameter::Z;
        symmetric_ = p == Parameter::Chi || p == Parameter::B;
    }

    std::optional<Coloring> run()
    {
        if (k_ < 1 || k_ > n_)
            return std::nullopt;
        if (dominating_) {
            int heavy = 0;
            for (Vertex v = 0; v < n_; ++v)
                heavy += g_.degree(v) >= k_ - 1;
            if (heavy < k_)
                return std::nullopt;
        }
        if (grundy_ && g_.max_degree() < k_ - 1)
            return std::nullopt;
        color_.assign(n_, 0);
        cls_.assign(k_ + 1, 0);
        unassigned_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        if (!dfs(0, 0))
            return std::nullopt;
        return Coloring(found_);
    }

    std::int64_t explored() const { return explored_; }

private:
    void build_order()
    {
        std::vector<char> placed(n_, 0);
        std::vector<int> touched(n_, 0);
        for (int step = 0; step < n_; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < n_; ++v) {
                if (placed[v])
                    continue;
                if (best < 0 || touched[v] > touched[best] ||
                    (touched[v] == touched[best] && g_.degree(v) > g_.degree(best)))
                    best = v;
            }
            placed[best] = 1;
            order_.push_back(best);
            for (Vertex w : g_.neighbors(best))
                ++touched[w];
        }
    }

    int missing_lower(Vertex x) const
    {
        int miss = 0;
        for (Color i = 1; i < color_[x]; ++i)
            miss += (nbr_[x] & cls_[i]) == 0;
        return miss;
    }

    int missing_other(Vertex x) const
    {
        int miss = 0;
        for (Color i = 1; i <= k_; ++i)
            miss += i != color_[x] && (nbr_[x] & cls_[i]) == 0;
        return miss;
    }

    int open_neighbors(Vertex x) const { return std::popcount(nbr_[x] & unassigned_); }

    bool grundy_feasible(Vertex v) const
    {
        if (missing_lower(v) > open_neighbors(v))
            return false;
        for (Mask rest = nbr_[v] & ~unassigned_; rest; rest &= rest - 1) {
            Vertex x = std::countr_zero(rest);
            if (missing_lower(x) > open_neighbors(x))
                return false;
        }
        return true;
    }

    bool dominating_feasible() const
    {
        for (Color j = 1; j <= k_; ++j) {
            bool possible = false;
            for (Mask m = cls_[j]; m && !possible; m &= m - 1) {
                Vertex x = std::countr_zero(m);
                possible = missing_other(x) <= open_neighbors(x);
            }
            for (Mask m = unassigned_; m && !possible; m &= m - 1) {
                Vertex y = std::countr_zero(m);
                possible = g_.degree(y) >= k_ - 1 && (nbr_[y] & cls_[j]) == 0;
            }
            if (!possible)
                return false;
        }
        return true;
    }

    bool leaf_ok() const
    {
        if (!dominating_)
            return true;
        std::vector<char> cd(n_, 0);
        std::vector<char> class_has_cd(k_ + 1, 0);
        for (Vertex v = 0; v < n_; ++v) {
            cd[v] = missing_other(v) == 0;
            if (cd[v])
                class_has_cd[color_[v]] = 1;
        }
        for (Color j = 1; j <= k_; ++j)
            if (!class_has_cd[j])
                return false;
        if (p_ != Parameter::Z)
            return true;
        Mask cd_mask = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (cd[v])
                cd_mask |= Mask{1} << v;
        for (Mask m = cls_[k_] & cd_mask; m; m &= m - 1) {
            Vertex top = std::countr_zero(m);
            bool star = true;
            for (Color j = 1; j < k_ && star; ++j)
                star = (nbr_[top] & cls_[j] & cd_mask) != 0;
            if (star)
                return true;
        }
        return false;
    }

    bool dfs(int depth, Mask used)
    {
        if (depth == n_) {
            ++explored_;
            if (p_ != Parameter::Chi && std::popcount(used) != k_)
                return false;
            if (!leaf_ok())
                return false;
            found_ = color_;
            return true;
        }
        const Vertex v = order_[depth];
        const int remaining = n_ - depth;
        int top = k_;
        if (symmetric_)
            top = std::min(k_, std::popcount(used) + 1);
        for (Color c = 1; c <= top; ++c) {
            if (nbr_[v] & cls_[c])
                continue;
            if (grundy_ && g_.degree(v) < c - 1)
                continue;
            color_[v] = c;
            const Mask bit = Mask{1} << v;
            cls_[c] |= bit;
            unassigned_ &= ~bit;
            const Mask used_now = used | (Mask{1} << (c - 1));
            bool ok = true;
            if (p_ != Parameter::Chi) {
                int unused = k_ - std::popcount(used_now);
                ok = unused <= remaining - 1;
            }
            if (ok && grundy_)
                ok = grundy_feasible(v);
            if (ok && dominating_)
                ok = dominating_feasible();
            if (ok && dfs(depth + 1, used_now))
                return true;
            cls_[c] &= ~bit;
            unassigned_ |= bit;
            color_[v] = 0;
        }
        return false;
    }

    const Graph& g_;
    Parameter p_;
    int k_;
    int n_;
    bool grundy_ = false;
    bool dominating_ = false;
    bool symmetric_ = false;
    std::vector<Mask> nbr_;
    std::vector<Vertex> order_;
    std::vector<Color> color_;
    std::vector<Mask> cls_;
    Mask unassigned_ = 0;
    std::vector<Color> found_;
    std::int64_t explored_ = 0;
};

void check_limit(const Graph& g, int limit_n, Parameter p)
{
    if (g.n() > limit_n)
        throw OracleLimitError("exact " + to_string(p) + " limited to " + std::to_string(limit_n) +
                               " vertices, graph has " + std::to_string(g.n()));
}

} // namespace

std::string to_string(Parameter p)
{
    switch (p) {
    case Parameter::Chi:
        return "chi";
    case Parameter::Gamma:
        return "gamma";
    case Parameter::B:
        return "b";
    case Parameter::Z:
        return "z";
    }
    return "?";
}

Parameter parse_parameter(const std::string& name)
{
    if (name == "chi")
        return Parameter::Chi;
    if (name == "gamma")
        return Parameter::Gamma;
    if (name == "b")
        return Parameter::B;
    if (name == "z")
        return Parameter::Z;
    throw std::invalid_argument("unknown parameter '" + name + "'");
}

int default_limit(Parameter p) { return p == Parameter::Z ? 14 : 12; }

std::optional<Coloring> find_coloring(const Graph& g, Parameter p, int k, std::int64_t* explored)
{
    ExactSearch search(g, p, k);
    auto out = search.run();
    if (explored)
        *explored += search.explored();
    if (out && p == Parameter::Chi)
        out = out->normalized();
    return out;
}

OracleResult exact_chi(const Graph& g, int limit_n)
{
    check_limit(g, limit_n, Parameter::Chi);
    OracleResult r;
    if (g.n() == 0)
        return r;
    for (int k = 1; k <= g.n(); ++k) {
        if (auto c = find_coloring(g, Parameter::Chi, k, &r.explored)) {
            r.witness = *c;
            r.value = c->k();
            return r;
        }
    }
    throw std::logic_error("no proper coloring found");
}

namespace {

OracleResult maximize(const Graph& g, Parameter p)
{
    OracleResult r;
    if (g.n() == 0)
        return r;
    const int upper = std::min(g.n(), g.max_degree() + 1);
    for (int k = upper; k >= 1; --k) {
        if (auto c = find_coloring(g, p, k, &r.explored)) {
            r.witness = *c;
            r.value = k;
            return r;
        }
    }
    throw std::logic_error("no coloring found for " + to_string(p));
}

} // namespace

OracleResult exact_gamma(const Graph& g, int limit_n)
{
    check_limit(g, limit_n, Parameter::Gamma);
    return maximize(g, Parameter::Gamma);
}

OracleResult exact_b(const Graph& g, int limit_n)
{
    check_limit(g, limit_n, Parameter::B);
    return maximize(g, Parameter::B);
}

OracleResult exact_z(const Graph& g, int limit_n)
{
    check_limit(g, limit_n, Parameter::Z);
    return maximize(g, Parameter::Z);
}

OracleResult exact(const Graph& g, Parameter p, int limit_n)
{
    switch (p) {
    case Parameter::Chi:
        return exact_chi(g, limit_n);
    case Parameter::Gamma:
        return exact_gamma(g, limit_n);
    case Parameter::B:
        return exact_b(g, limit_n);
    case Parameter::Z:
        return exact_z(g, limit_n);
    }
    throw std::invalid_argument("unknown parameter");
}

bool has_z_coloring_at_least(const Graph& g, int k)
{
    const int upper = std::min(g.n(), g.max_degree() + 1);
    for (int j = upper; j >= std::max(k, 1); --j)
        if (find_coloring(g, Parameter::Z, j))
            return true;
    return false;
}

} // namespace zcolor
