#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zcolor/atoms.hpp"
#include "zcolor/families.hpp"
#include "zcolor/graph.hpp"
#include "zcolor/oracle.hpp"
#include "zcolor/random.hpp"
#include "zcolor/reduce.hpp"
#include "zcolor/verify.hpp"

using namespace zcolor;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Thrown for bad input; main turns it into exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Own output failed verification; main turns it into exit code 1.
struct InvariantBreach : std::logic_error {
    using std::logic_error::logic_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

Graph load_graph(const std::string& path)
{
    const std::string text = read_file(path);
    try {
        return parse_dimacs(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

struct RandomSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

RandomSpec parse_random(const std::string& text)
{
    RandomSpec r;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> r.n >> c1 >> r.p >> c2 >> r.seed) || c1 != ',' || c2 != ',' || !in.eof() || r.n < 0 || r.p < 0 ||
        r.p > 1)
        throw UsageError("--random expects n,p,seed with n >= 0 and 0 <= p <= 1, got '" + text + "'");
    return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Heuristic dispatch shared by `color` and `bench`.

enum class Heuristic { Greedy, Grundy, Gcd, Z, Iz };

Heuristic parse_heuristic(const std::string& name)
{
    if (name == "greedy")
        return Heuristic::Greedy;
    if (name == "grundy")
        return Heuristic::Grundy;
    if (name == "gcd")
        return Heuristic::Gcd;
    if (name == "z")
        return Heuristic::Z;
    if (name == "iz")
        return Heuristic::Iz;
    throw UsageError("unknown heuristic '" + name + "'");
}

struct HeuristicConfig {
    Heuristic heuristic = Heuristic::Z;
    int rounds = 10;
    std::int64_t budget = 1000;
    std::uint64_t seed = 0;
    bool complementary = false;
};

struct Flags {
    bool proper = false;
    bool grundy = false;
    bool cd = false;
    bool z = false;
};

Flags flags_of(const Graph& g, const Coloring& c)
{
    Flags f;
    f.proper = check_proper(g, c).pass;
    if (f.proper) {
        f.grundy = check_grundy(g, c).pass;
        f.cd = check_cd(g, c).pass;
        f.z = check_z(g, c).pass;
    }
    return f;
}

Coloring run_heuristic(const Graph& g, const HeuristicConfig& cfg)
{
    Coloring c;
    switch (cfg.heuristic) {
    case Heuristic::Greedy:
        c = greedy_coloring(g);
        break;
    case Heuristic::Grundy:
        c = grundy_reduce(g, greedy_coloring(g)).coloring;
        break;
    case Heuristic::Gcd:
        c = cd_gcd_transform(g, grundy_reduce(g, greedy_coloring(g)).coloring).coloring;
        break;
    case Heuristic::Z:
        c = z_heuristic(g).coloring;
        break;
    case Heuristic::Iz:
        c = iterated_z(g, cfg.rounds, cfg.seed).best;
        break;
    }
    if (cfg.complementary) {
        if (cfg.heuristic != Heuristic::Z && cfg.heuristic != Heuristic::Iz)
            throw UsageError("--complementary needs a z-coloring (heuristic z or iz)");
        c = complementary(g, c, cfg.budget, cfg.seed).coloring;
    }

    // Re-verify what the selected pipeline promises before anything leaves.
    const Flags f = flags_of(g, c);
    bool ok = f.proper;
    if (cfg.heuristic != Heuristic::Greedy)
        ok = ok && f.grundy;
    if (cfg.heuristic == Heuristic::Gcd)
        ok = ok && f.cd;
    if (cfg.heuristic == Heuristic::Z || cfg.heuristic == Heuristic::Iz)
        ok = ok && f.z;
    if (!ok)
        throw InvariantBreach("heuristic output failed its own verification");
    return c;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

int cmd_color(const std::string& path, const std::string& random, const HeuristicConfig& cfg,
              const std::string& out, const std::string& format)
{
    if (path.empty() == random.empty())
        throw UsageError("color needs exactly one of GRAPH or --random");
    Graph g;
    if (!random.empty()) {
        RandomSpec r = parse_random(random);
        g = erdos_renyi(r.n, r.p, r.seed);
    } else {
        g = load_graph(path);
    }
    const auto start = std::chrono::steady_clock::now();
    const Coloring c = run_heuristic(g, cfg);
    const double ms = elapsed_ms(start);
    const Flags f = flags_of(g, c);

    std::optional<std::vector<Vertex>> star;
    if (f.z)
        star = find_dominating_star(g, c);
    const std::string record = serialize_coloring(g, c, star);
    if (parse_coloring_record(record).coloring != c)
        throw InvariantBreach("coloring record does not round-trip");

    if (format == "human") {
        std::ostringstream table;
        table << "n " << g.n() << "  m " << g.m() << "  max degree " << g.max_degree() << '\n'
              << "k " << c.k() << "  proper " << yes_no(f.proper) << "  grundy " << yes_no(f.grundy) << "  cd "
              << yes_no(f.cd) << "  z " << yes_no(f.z) << '\n';
        const auto classes = c.classes();
        for (std::size_t i = 0; i < classes.size(); ++i) {
            table << "class " << i + 1 << ":";
            for (Vertex v : classes[i])
                table << ' ' << v + 1;
            table << '\n';
        }
        write_output(out, table.str());
    } else {
        write_output(out, record);
    }
    char summary[160];
    std::snprintf(summary, sizeof summary, "k=%d proper=%d grundy=%d cd=%d z=%d elapsed_ms=%.3f\n", c.k(), f.proper,
                  f.grundy, f.cd, f.z, ms);
    std::cerr << summary;
    return kPass;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const std::string& level)
{
    const Graph g = load_graph(graph_path);
    ColoringRecord rec;
    try {
        rec = parse_coloring_record(read_file(coloring_path));
    } catch (const ParseError& e) {
        throw UsageError(coloring_path + ": " + e.what());
    }
    if (rec.coloring.size() != g.n())
        throw UsageError("coloring has " + std::to_string(rec.coloring.size()) + " vertices, graph has " +
                         std::to_string(g.n()));
    if (rec.graph.edges() != g.edges())
        throw UsageError("coloring record was made for a different graph");

    Verdict v;
    if (level == "proper")
        v = check_proper(g, rec.coloring);
    else if (level == "grundy")
        v = check_proper(g, rec.coloring).pass ? check_grundy(g, rec.coloring) : check_proper(g, rec.coloring);
    else if (level == "cd")
        v = check_cd(g, rec.coloring);
    else if (level == "z")
        v = check_z(g, rec.coloring);
    else
        throw UsageError("unknown level '" + level + "'");
    std::cout << serialize_verdict(v);
    for (const auto& x : v.violations) {
        std::cerr << to_string(x.kind);
        if (x.vertex >= 0)
            std::cerr << " vertex " << x.vertex + 1;
        if (x.other >= 0)
            std::cerr << " other " << x.other + 1;
        if (x.color > 0)
            std::cerr << " color " << x.color;
        std::cerr << '\n';
    }
    return v.pass ? kPass : kFail;
}

int cmd_exact(const std::string& path, const std::string& param, int limit)
{
    const Graph g = load_graph(path);
    Parameter p;
    try {
        p = parse_parameter(param);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    OracleResult r;
    try {
        r = exact(g, p, limit > 0 ? limit : default_limit(p));
    } catch (const OracleLimitError& e) {
        throw UsageError(e.what());
    }
    nlohmann::ordered_json out;
    out["param"] = to_string(p);
    out["value"] = r.value;
    out["explored"] = r.explored;
    out["witness"] = r.witness.colors();
    std::cout << out.dump() << '\n';
    return kPass;
}

int cmd_atoms_gen(int t, bool triangle_free, bool allow_large, const std::string& out)
{
    AtomOptions options;
    options.allow_large = allow_large;
    AtomCatalog catalog;
    try {
        catalog = generate_atoms(t, triangle_free, options);
    } catch (const AtomLimitError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& a : catalog.atoms)
        if (!check_z(a.cg.graph, a.cg.coloring).pass)
            throw InvariantBreach("atom coloring is not a z-coloring");
    write_output(out, serialize_catalog(catalog));
    std::cerr << "atoms=" << catalog.atoms.size() << " removed_by_minimality=" << catalog.removed_by_minimality
              << '\n';
    return kPass;
}

int cmd_atoms_bound(const std::string& path, int t, const std::string& catalog_path)
{
    const Graph g = load_graph(path);
    AtomCatalog catalog;
    try {
        catalog = parse_catalog(read_file(catalog_path));
    } catch (const ParseError& e) {
        throw UsageError(catalog_path + ": " + e.what());
    }
    BoundVerdict v;
    try {
        v = prove_upper_bound(g, t, catalog);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << serialize_bound_verdict(v);
    return kPass;
}

int cmd_family_gen(const std::string& name, int k, const std::string& out, const std::string& coloring_out)
{
    FamilySpec spec;
    try {
        spec = {parse_family(name), k};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Graph g;
    std::optional<ColoredGraph> colored;
    try {
        if (spec.name == Family::Rk)
            colored = gen_Rk(k);
        else if (spec.name == Family::Tk)
            colored = gen_Tk(k);
        g = colored ? colored->graph : generate(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!coloring_out.empty()) {
        if (!colored)
            throw UsageError("only Rk and Tk come with a canonic coloring");
        const Verdict v = spec.name == Family::Rk ? check_z(g, colored->coloring) : check_grundy(g, colored->coloring);
        if (!v.pass)
            throw InvariantBreach("canonic coloring failed verification");
        write_output(coloring_out, serialize_coloring(*colored));
    }
    write_output(out, write_dimacs(g));
    return kPass;
}

struct BenchInstance {
    std::string name;
    std::optional<Graph> graph;
    std::string error;
};

int cmd_bench(const std::vector<std::string>& paths, const std::vector<std::string>& randoms,
              const std::vector<std::string>& heuristics, const HeuristicConfig& base, const std::string& format,
              bool timing)
{
    std::vector<Heuristic> hs;
    for (const auto& h : heuristics)
        hs.push_back(parse_heuristic(h));
    std::vector<BenchInstance> instances;
    for (const auto& p : paths) {
        BenchInstance inst{p, std::nullopt, {}};
        try {
            inst.graph = load_graph(p);
        } catch (const UsageError& e) {
            inst.error = e.what();
        }
        instances.push_back(std::move(inst));
    }
    for (const auto& r : randoms) {
        RandomSpec spec = parse_random(r);
        instances.push_back({"G(" + r + ")", erdos_renyi(spec.n, spec.p, spec.seed), {}});
    }

    std::ostringstream out;
    if (format == "human") {
        out << "instance";
        for (const auto& h : heuristics)
            out << '\t' << h << (timing ? "\t" + h + "_ms" : "");
        out << '\n';
    }
    for (const auto& inst : instances) {
        nlohmann::ordered_json row;
        row["instance"] = inst.name;
        if (inst.graph) {
            row["n"] = inst.graph->n();
            row["m"] = inst.graph->m();
        }
        std::string line = inst.name;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            nlohmann::ordered_json cell;
            std::string text;
            if (!inst.graph) {
                cell["error"] = inst.error;
                text = timing ? "error\t-" : "error";
            } else {
                HeuristicConfig cfg = base;
                cfg.heuristic = hs[i];
                const auto start = std::chrono::steady_clock::now();
                try {
                    const Coloring c = run_heuristic(*inst.graph, cfg);
                    cell["colors"] = c.k();
                    text = std::to_string(c.k());
                } catch (const std::exception& e) {
                    cell["error"] = e.what();
                    text = "error";
                }
                if (timing) {
                    const double ms = elapsed_ms(start);
                    cell["ms"] = ms;
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.3f", ms);
                    text += std::string("\t") + buf;
                }
            }
            row[heuristics[i]] = cell;
            line += '\t' + text;
        }
        if (format == "human")
            out << line << '\n';
        else
            out << row.dump() << '\n';
    }
    std::cout << out.str();
    return kPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"z-coloring toolkit"};
    app.require_subcommand(1);

    HeuristicConfig hcfg;
    std::string heuristic = "z";
    std::string format = "record";

    auto add_heuristic_options = [&](CLI::App* cmd) {
        cmd->add_option("--rounds", hcfg.rounds, "Rounds for iz")->check(CLI::PositiveNumber);
        cmd->add_option("--budget", hcfg.budget, "Tuple budget for --complementary")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", hcfg.seed, "Seed for every randomized step");
        cmd->add_flag("--complementary", hcfg.complementary, "Finish with the complementary z-coloring search");
    };

    std::string graph_path, coloring_path, out_path, random_spec;
    auto* color = app.add_subcommand("color", "Color a graph with a heuristic");
    color->add_option("GRAPH", graph_path, "DIMACS graph");
    color->add_option("--random", random_spec, "Use G(n,p) given as n,p,seed instead of a file");
    color->add_option("--heuristic", heuristic)->check(CLI::IsMember({"greedy", "grundy", "gcd", "z", "iz"}));
    color->add_option("--out", out_path, "Output file (stdout when absent)");
    color->add_option("--format", format)->check(CLI::IsMember({"record", "human"}));
    add_heuristic_options(color);

    std::string level = "z";
    auto* verify = app.add_subcommand("verify", "Check a coloring record against a graph");
    verify->add_option("GRAPH", graph_path)->required();
    verify->add_option("COLORING", coloring_path)->required();
    verify->add_option("--level", level)->check(CLI::IsMember({"proper", "grundy", "cd", "z"}));

    std::string param = "z";
    int limit = 0;
    auto* exact_cmd = app.add_subcommand("exact", "Exact chi, gamma, b or z by exhaustive search");
    exact_cmd->add_option("GRAPH", graph_path)->required();
    exact_cmd->add_option("--param", param)->check(CLI::IsMember({"chi", "gamma", "b", "z"}));
    exact_cmd->add_option("--limit", limit, "Largest vertex count to accept (0 = default)");

    int t = 3;
    bool triangle_free = false, allow_large = false;
    std::string catalog_path;
    auto* atoms = app.add_subcommand("atoms", "z-atom catalogs");
    atoms->require_subcommand(1);
    auto* atoms_gen = atoms->add_subcommand("gen", "Generate the atom catalog for z-number t");
    atoms_gen->add_option("--t", t)->required();
    atoms_gen->add_flag("--triangle-free", triangle_free);
    atoms_gen->add_flag("--allow-large", allow_large, "Lift the size guard");
    atoms_gen->add_option("--out", out_path);
    auto* atoms_bound = atoms->add_subcommand("bound", "Try to prove z(GRAPH) <= t - 1");
    atoms_bound->add_option("GRAPH", graph_path)->required();
    atoms_bound->add_option("--t", t)->required();
    atoms_bound->add_option("--catalog", catalog_path)->required();

    std::string family_name;
    int k = 0;
    std::string family_coloring;
    auto* family = app.add_subcommand("family", "Named graph families");
    family->require_subcommand(1);
    auto* family_gen = family->add_subcommand("gen", "Write a family member as DIMACS");
    family_gen->add_option("--name", family_name)->required();
    family_gen->add_option("--k", k)->required();
    family_gen->add_option("--out", out_path);
    family_gen->add_option("--coloring", family_coloring, "Also write the canonic coloring record (Rk, Tk)");

    std::vector<std::string> bench_paths, bench_random;
    std::vector<std::string> bench_heuristics{"greedy", "z"};
    bool no_timing = false;
    auto* bench = app.add_subcommand("bench", "Compare heuristics on instances");
    bench->add_option("INSTANCES", bench_paths, "DIMACS files");
    bench->add_option("--random", bench_random, "n,p,seed; repeatable");
    bench->add_option("--heuristics", bench_heuristics)->delimiter(',');
    bench->add_option("--format", format)->check(CLI::IsMember({"record", "human"}));
    bench->add_flag("--no-timing", no_timing, "Omit timings so output is reproducible");
    add_heuristic_options(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*color) {
            hcfg.heuristic = parse_heuristic(heuristic);
            return cmd_color(graph_path, random_spec, hcfg, out_path, format);
        }
        if (*verify)
            return cmd_verify(graph_path, coloring_path, level);
        if (*exact_cmd)
            return cmd_exact(graph_path, param, limit);
        if (*atoms_gen)
            return cmd_atoms_gen(t, triangle_free, allow_large, out_path);
        if (*atoms_bound)
            return cmd_atoms_bound(graph_path, t, catalog_path);
        if (*family_gen)
            return cmd_family_gen(family_name, k, out_path, family_coloring);
        if (*bench)
            return cmd_bench(bench_paths, bench_random, bench_heuristics, hcfg, format, !no_timing);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantBreach& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
