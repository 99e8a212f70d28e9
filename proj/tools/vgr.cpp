#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vgr/geometry.h"
#include "vgr/graph.h"
#include "vgr/pseudo_tower.h"
#include "vgr/tower.h"
#include "vgr/triangle.h"

namespace {

using namespace vgr;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kFound = 0;
constexpr int kFailure = 1;
constexpr int kNone = 2;

/// I/O problems and malformed input; reported on stderr with exit 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw InputError("cannot read " + path);
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw InputError("cannot write " + path);
}

Graph load_graph(const std::string& path) {
    const std::string text = read_input(path);
    try {
        return parse_graph(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Polygon load_polygon(const std::string& path, VertexList* keep) {
    const std::string text = read_input(path);
    try {
        return parse_polygon(text, keep);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ── solve ───────────────────────────────────────────────────────────

/// Output of one solver class: candidate vertex orders (cycles for towers
/// and pseudo-triangles, top-through boundary paths for pseudo-towers).
struct ClassResult {
    std::vector<VertexList> candidates;
    std::map<std::string, std::size_t> rejected;
};

ClassResult run_tower(const Graph& g) {
    ClassResult r;
    try {
        for (const CycleCandidate& c : solve_tower(g)) r.candidates.emplace_back(c.order().begin(), c.order().end());
    } catch (const RecognitionError&) {
        r.rejected["recognition"] = 1;
    }
    return r;
}

ClassResult run_pseudo_tower(const Graph& g) {
    ClassResult r;
    try {
        for (const PseudoTowerSolution& s : solve_pseudo_tower(g)) {
            // One chain read bottom -> top, then the other top -> bottom.
            VertexList path(s.chains[0].rbegin(), s.chains[0].rend());
            path.insert(path.end(), s.chains[1].begin() + 1, s.chains[1].end());
            if (path.back() < path.front()) std::reverse(path.begin(), path.end());
            r.candidates.push_back(std::move(path));
        }
    } catch (const RecognitionError&) {
        r.rejected["recognition"] = 1;
    }
    std::sort(r.candidates.begin(), r.candidates.end());
    r.candidates.erase(std::unique(r.candidates.begin(), r.candidates.end()), r.candidates.end());
    return r;
}

ClassResult run_pseudo_triangle(const Graph& g, unsigned threads) {
    ClassResult r;
    SolveStats stats;
    for (const PseudoTriangleSolution& s : solve(g, {threads}, &stats)) {
        r.candidates.emplace_back(s.cycle.order().begin(), s.cycle.order().end());
    }
    r.rejected = stats.rejected;
    return r;
}

ClassResult run_class(const std::string& kind, const Graph& g, unsigned threads) {
    if (kind == "tower") return run_tower(g);
    if (kind == "pseudo-tower") return run_pseudo_tower(g);
    return run_pseudo_triangle(g, threads);
}

int cmd_solve(const std::string& path, const std::string& kind, bool as_json, unsigned threads) {
    const Graph g = load_graph(path);
    const auto start = Clock::now();
    const std::vector<std::string> order =
        kind == "auto" ? std::vector<std::string>{"tower", "pseudo-tower", "pseudo-triangle"}
                       : std::vector<std::string>{kind};
    std::string used = order.back();
    ClassResult result;
    for (const std::string& k : order) {
        result = run_class(k, g, threads);
        used = k;
        if (!result.candidates.empty()) break;
    }
    const double millis = millis_since(start);

    if (as_json) {
        json report = {{"input", path},
                       {"kind", used},
                       {"candidates", result.candidates},
                       {"millis", millis},
                       {"rejected", result.rejected}};
        std::cout << report.dump(2) << '\n';
    } else {
        if (kind == "auto" && !result.candidates.empty()) std::cout << "# " << used << '\n';
        for (const VertexList& c : result.candidates) {
            for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i];
            std::cout << '\n';
        }
    }
    return result.candidates.empty() ? kNone : kFound;
}

// ── gen / visgraph / render ─────────────────────────────────────────

int cmd_gen(const std::string& kind, std::size_t n, std::uint64_t seed, bool degenerate,
            const std::string& out_path) {
    std::ostringstream out;
    try {
        if (kind == "tower") {
            write_polygon(out, gen_tower(n, seed));
        } else if (kind == "pseudo-tower") {
            write_pseudo_tower(out, gen_pseudo_tower(n, seed));
        } else if (kind == "pseudo-triangle") {
            write_polygon(out, gen_pseudo_triangle(n, seed, degenerate));
        } else {
            write_polygon(out, gen_convex(n, seed));
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    write_output(out_path, out.str());
    return kFound;
}

Graph polygon_graph(const Polygon& poly, const VertexList& keep) {
    try {
        if (keep.empty()) return visibility_graph(poly);
        return visibility_graph(PseudoTowerPolygon{poly, keep});
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

int cmd_visgraph(const std::string& path, const std::string& out_path) {
    VertexList keep;
    const Polygon poly = load_polygon(path, &keep);
    write_output(out_path, serialize_graph(polygon_graph(poly, keep)));
    return kFound;
}

int cmd_render(const std::string& path, bool edges, const std::string& out_path) {
    VertexList keep;
    const Polygon poly = load_polygon(path, &keep);
    if (edges) {
        // Edges are drawn in polygon ids, so pseudo-tower files use the
        // visibility graph of the whole polygon.
        const Graph g = polygon_graph(poly, {});
        write_output(out_path, render_svg(poly, &g));
    } else {
        write_output(out_path, render_svg(poly));
    }
    return kFound;
}

// ── verify ──────────────────────────────────────────────────────────

VertexList parse_cycle(const std::string& text) {
    VertexList order;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.front() == '#') {
            std::getline(in, token);
            continue;
        }
        try {
            std::size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (used != token.size() || v < 0 || v > 0x7fffffff) throw std::invalid_argument(token);
            order.push_back(static_cast<Vertex>(v));
        } catch (const std::logic_error&) {
            throw InputError("bad vertex id in cycle: " + token);
        }
    }
    return order;
}

/// True when some choice of top and bottom joints turns the cycle into a
/// pseudo-triangle boundary accepted by verify_candidate.
bool verify_cycle(const Graph& g, const VertexList& order) {
    const std::size_t n = g.size();
    if (order.size() != n || n < 3) return false;
    VertexList sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] != static_cast<Vertex>(i)) return false;
    }
    if (!is_cycle_in_graph(g, order)) return false;
    for (std::size_t shift = 0; shift < n; ++shift) {
        VertexList rotated(order.begin() + static_cast<std::ptrdiff_t>(shift), order.end());
        rotated.insert(rotated.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(shift));
        for (const auto& [left, right] : bottom_joint_placements(g, rotated)) {
            if (verify_candidate(g, solution_from_cycle(rotated, rotated.front(), left, right))) return true;
        }
    }
    return false;
}

int cmd_verify(const std::string& graph_path, const std::string& cycle_path) {
    const Graph g = load_graph(graph_path);
    const VertexList order = parse_cycle(read_input(cycle_path));
    const bool ok = verify_cycle(g, order);
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kFound : kNone;
}

// ── bench ───────────────────────────────────────────────────────────

int cmd_bench(const std::string& kind, const std::vector<std::size_t>& sizes, std::size_t count,
              std::uint64_t seed, unsigned threads) {
    std::cout << "kind,n,m,millis,candidates\n";
    for (std::size_t n : sizes) {
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t s = seed + i;
            Graph g;
            try {
                if (kind == "tower") {
                    g = visibility_graph(gen_tower(n, s));
                } else if (kind == "pseudo-tower") {
                    g = visibility_graph(gen_pseudo_tower(n, s));
                } else {
                    g = visibility_graph(gen_pseudo_triangle(n, s));
                }
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            const auto start = Clock::now();
            const ClassResult r = run_class(kind, g, threads);
            const double millis = millis_since(start);
            std::cout << kind << ',' << n << ',' << g.edges().size() << ',' << millis << ','
                      << r.candidates.size() << '\n';
        }
    }
    return kFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognize tower, pseudo-tower and pseudo-triangle visibility graphs"};
    app.require_subcommand(1);
    const std::vector<std::string> solver_kinds{"auto", "tower", "pseudo-tower", "pseudo-triangle"};
    const std::vector<std::string> gen_kinds{"tower", "pseudo-tower", "pseudo-triangle", "convex"};

    std::string graph_path, poly_path, cycle_path, out_path;
    std::string kind = "auto";
    bool as_json = false, degenerate = false, edges = false;
    unsigned threads = 1;
    std::size_t n = 10, count = 20;
    std::uint64_t seed = 1;
    std::vector<std::size_t> sizes{20, 40, 80, 160};

    auto* solve_cmd = app.add_subcommand("solve", "Enumerate candidate boundaries of a graph");
    solve_cmd->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
    solve_cmd->add_option("--kind", kind, "Polygon class")->check(CLI::IsMember(solver_kinds));
    solve_cmd->add_flag("--json", as_json, "Print a JSON run report");
    solve_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    std::string gen_kind = "pseudo-triangle";
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random polygon");
    gen_cmd->add_option("--kind", gen_kind, "Polygon class")->check(CLI::IsMember(gen_kinds));
    gen_cmd->add_option("--n", n, "Vertex count")->check(CLI::Range(3, 1 << 16));
    gen_cmd->add_option("--seed", seed, "Random seed");
    gen_cmd->add_flag("--degenerate", degenerate, "Pseudo-triangle with a single common bottom vertex");
    gen_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* vis_cmd = app.add_subcommand("visgraph", "Visibility graph of a polygon file");
    vis_cmd->add_option("polygon", poly_path, "Polygon file ('-' for stdin)")->required();
    vis_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Check a cycle as a pseudo-triangle boundary");
    verify_cmd->add_option("graph", graph_path, "Graph file")->required();
    verify_cmd->add_option("cycle", cycle_path, "File with the vertex order")->required();

    auto* render_cmd = app.add_subcommand("render", "Draw a polygon as SVG");
    render_cmd->add_option("polygon", poly_path, "Polygon file ('-' for stdin)")->required();
    render_cmd->add_flag("--edges", edges, "Also draw the visibility graph");
    render_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    std::string bench_kind = "pseudo-triangle";
    auto* bench_cmd = app.add_subcommand("bench", "Time the solver over generated instances (CSV)");
    bench_cmd->add_option("--kind", bench_kind, "Polygon class")
        ->check(CLI::IsMember(std::vector<std::string>{"tower", "pseudo-tower", "pseudo-triangle"}));
    bench_cmd->add_option("--sizes", sizes, "Vertex counts")->delimiter(',');
    bench_cmd->add_option("--count", count, "Instances per size");
    bench_cmd->add_option("--seed", seed, "First seed");
    bench_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kFailure;
    }

    try {
        if (*solve_cmd) return cmd_solve(graph_path, kind, as_json, threads);
        if (*gen_cmd) return cmd_gen(gen_kind, n, seed, degenerate, out_path);
        if (*vis_cmd) return cmd_visgraph(poly_path, out_path);
        if (*verify_cmd) return cmd_verify(graph_path, cycle_path);
        if (*render_cmd) return cmd_render(poly_path, edges, out_path);
        if (*bench_cmd) return cmd_bench(bench_kind, sizes, count, seed, threads);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
