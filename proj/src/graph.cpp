#include "vgr/graph.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <queue>
#include <sstream>
#include <string_view>

namespace vgr {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

// ── Graph ───────────────────────────────────────────────────────────

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
            static_cast<std::size_t>(e.v) >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                    std::to_string(dup->v));
    }

    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }

    row_words_ = (n + 63) / 64;
    matrix_.assign(row_words_ * n, 0);
    for (const Edge& e : edges_) {
        matrix_[static_cast<std::size_t>(e.u) * row_words_ + static_cast<std::size_t>(e.v) / 64] |=
            std::uint64_t{1} << (e.v % 64);
        matrix_[static_cast<std::size_t>(e.v) * row_words_ + static_cast<std::size_t>(e.u) / 64] |=
            std::uint64_t{1} << (e.u % 64);
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return {adjacency_.data() + offsets_.at(i), offsets_.at(i + 1) - offsets_[i]};
}

std::size_t Graph::degree(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return offsets_.at(i + 1) - offsets_[i];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
        return false;
    }
    const std::uint64_t word =
        matrix_[static_cast<std::size_t>(u) * row_words_ + static_cast<std::size_t>(v) / 64];
    return (word >> (v % 64)) & 1u;
}

// ── Text format ─────────────────────────────────────────────────────

namespace {

std::vector<long long> parse_numbers(std::string_view line, std::size_t line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long value = 0;
        const auto token = line.substr(i, j - i);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

bool is_skippable(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line)) continue;
        const auto nums = parse_numbers(line, line_no);
        if (n < 0) {
            if (nums.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
            n = nums[0];
            m = nums[1];
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            if (n > (1 << 24)) throw ParseError(line_no, "vertex count too large");
            continue;
        }
        if (static_cast<long long>(edges.size()) >= m) {
            throw ParseError(line_no, "more edge lines than declared");
        }
        if (nums.size() != 2) throw ParseError(line_no, "expected edge \"u v\"");
        const long long u = nums[0];
        const long long v = nums[1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
        }
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        edge_lines.push_back(line_no);
    }
    if (n < 0) throw ParseError(line_no + 1, "missing header \"n m\"");
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    }

    // Report duplicates against the line where the repeat occurs.
    std::vector<std::pair<Edge, std::size_t>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e{std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)};
        keyed.emplace_back(e, edge_lines[i]);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first == keyed[i - 1].first) {
            throw ParseError(std::max(keyed[i].second, keyed[i - 1].second),
                             "duplicate edge " + std::to_string(keyed[i].first.u) + " " +
                                 std::to_string(keyed[i].first.v));
        }
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

// ── Structure ───────────────────────────────────────────────────────

std::vector<VertexList> connected_components(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<VertexList> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexList comp;
        std::queue<Vertex> q;
        q.push(static_cast<Vertex>(s));
        seen[s] = true;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    Subgraph sub;
    sub.from_parent.assign(g.size(), kNoVertex);
    VertexList sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
            throw std::invalid_argument("subgraph vertex out of range");
        }
        sub.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex v : sorted) {
        for (Vertex w : g.neighbors(v)) {
            if (w > v && sub.from_parent[static_cast<std::size_t>(w)] != kNoVertex) {
                edges.push_back({sub.from_parent[static_cast<std::size_t>(v)],
                                 sub.from_parent[static_cast<std::size_t>(w)]});
            }
        }
    }
    sub.graph = Graph(sorted.size(), edges);
    return sub;
}

// ── Cycles ──────────────────────────────────────────────────────────

CycleCandidate canonicalize(std::span<const Vertex> order) {
    const std::size_t k = order.size();
    std::vector<bool> seen(k, false);
    for (Vertex v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= k || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("cycle order is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    CycleCandidate c;
    if (k == 0) return c;
    const auto start = static_cast<std::size_t>(
        std::find(order.begin(), order.end(), Vertex{0}) - order.begin());
    const Vertex next = order[(start + 1) % k];
    const Vertex prev = order[(start + k - 1) % k];
    c.order_.reserve(k);
    if (k < 3 || next <= prev) {
        for (std::size_t i = 0; i < k; ++i) c.order_.push_back(order[(start + i) % k]);
    } else {
        for (std::size_t i = 0; i < k; ++i) c.order_.push_back(order[(start + k - i) % k]);
    }
    return c;
}

bool is_cycle_in_graph(const Graph& g, std::span<const Vertex> order) {
    const std::size_t k = order.size();
    if (k != g.size() || k < 3) return false;
    std::vector<bool> seen(k, false);
    for (Vertex v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= k || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!g.adjacent(order[i], order[(i + 1) % k])) return false;
    }
    return true;
}

bool is_cycle_in_graph(const Graph& g, const CycleCandidate& c) {
    return is_cycle_in_graph(g, c.order());
}

std::string to_string(const CycleCandidate& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c.order()[i]);
    }
    return out;
}

}  // namespace vgr
