#include "vgr/pseudo_tower.h"

#include <algorithm>
#include <set>

namespace vgr {

namespace {

[[noreturn]] void reject(const std::string& why) {
    throw RecognitionError("not a pseudo-tower visibility graph: " + why);
}

bool is_path(const Graph& g, const VertexList& chain) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!g.adjacent(chain[i - 1], chain[i])) return false;
    }
    return true;
}

// Leveling of the residual subgraph rewritten in parent ids.
Leveling lift(const Leveling& local, const Subgraph& sub, std::size_t n) {
    Leveling out;
    out.first.assign(n, local.levels.size());
    out.last.assign(n, local.levels.size());
    for (const VertexList& level : local.levels) {
        VertexList lifted;
        for (Vertex v : level) lifted.push_back(sub.parent(v));
        std::sort(lifted.begin(), lifted.end());
        out.levels.push_back(std::move(lifted));
    }
    for (std::size_t v = 0; v < sub.to_parent.size(); ++v) {
        const auto p = static_cast<std::size_t>(sub.to_parent[v]);
        out.first[p] = local.first[v];
        out.last[p] = local.last[v];
    }
    return out;
}

}  // namespace

TailSplit extract_tail(const Graph& g) {
    const std::size_t n = g.size();
    Vertex start = kNoVertex;
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(static_cast<Vertex>(v)) != 1) continue;
        if (start != kNoVertex) reject("more than one degree-1 vertex");
        start = static_cast<Vertex>(v);
    }

    TailSplit split;
    std::vector<bool> in_tail(n, false);
    if (start != kNoVertex) {
        Vertex prev = kNoVertex;
        Vertex cur = start;
        for (;;) {
            split.tail.push_back(cur);
            in_tail[static_cast<std::size_t>(cur)] = true;
            const auto nb = g.neighbors(cur);
            const Vertex next = nb[0] != prev ? nb[0] : nb[1];
            if (in_tail[static_cast<std::size_t>(next)]) reject("tail walk closes a cycle");
            const std::size_t d = g.degree(next);
            if (d >= 3) break;
            if (d == 1) reject("graph is a path");
            prev = cur;
            cur = next;
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!in_tail[v]) split.residual.push_back(static_cast<Vertex>(v));
    }
    return split;
}

std::vector<PseudoTowerSolution> solve_pseudo_tower(const Graph& g) {
    if (g.size() < 3) reject("fewer than 3 vertices");
    if (!is_connected(g)) reject("graph is disconnected");
    const TailSplit split = extract_tail(g);
    const Subgraph sub = induced_subgraph(g, split.residual);
    Vertex attach = kNoVertex;
    if (!split.tail.empty()) {
        for (Vertex w : g.neighbors(split.tail.back())) {
            if (sub.from_parent[static_cast<std::size_t>(w)] != kNoVertex) attach = w;
        }
    }

    VertexList tops;
    try {
        tops = tower_top_candidates(sub.graph);
    } catch (const RecognitionError&) {
        reject("tower part has no top candidate");
    }

    std::vector<PseudoTowerSolution> out;
    std::set<std::set<VertexList>> seen;
    bool leveled = false;
    for (Vertex top : tops) {
        Leveling local;
        BorderingGraph bg;
        try {
            local = compute_leveling(sub.graph, top);
            bg = bordering_graph(sub.graph, local);
        } catch (const RecognitionError&) {
            continue;
        }
        leveled = true;
        const Leveling lifted = lift(local, sub, g.size());
        for (const Bordering& b : enumerate_borderings(bg)) {
            auto [left, right] = tower_chains(local, b);
            std::array<VertexList, 2> chains{left, right};
            for (auto& chain : chains) {
                for (Vertex& v : chain) v = sub.parent(v);
            }
            if (attach != kNoVertex) {
                auto& host = chains[0].back() == attach ? chains[0] : chains[1];
                if (host.back() != attach) continue;
                host.insert(host.end(), split.tail.rbegin(), split.tail.rend());
            }
            if (!is_path(g, chains[0]) || !is_path(g, chains[1])) continue;
            if (!seen.insert({chains[0], chains[1]}).second) continue;
            out.push_back({split.tail, lifted, chains});
        }
    }
    if (!leveled) reject("tower part admits no leveling");
    return out;
}

}  // namespace vgr
