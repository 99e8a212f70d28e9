#include "vgr/tower.h"

#include <algorithm>
#include <queue>
#include <set>

namespace vgr {

namespace {

[[noreturn]] void reject(const std::string& why) {
    throw RecognitionError("not a tower visibility graph: " + why);
}

}  // namespace

VertexList tower_top_candidates(const Graph& g) {
    VertexList out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto nb = g.neighbors(static_cast<Vertex>(v));
        if (nb.size() == 2 && g.adjacent(nb[0], nb[1])) out.push_back(static_cast<Vertex>(v));
    }
    if (out.empty()) reject("no degree-2 vertex with adjacent neighbours");
    return out;
}

Leveling compute_leveling(const Graph& g, Vertex top) {
    const std::size_t n = g.size();
    if (top < 0 || static_cast<std::size_t>(top) >= n) reject("top out of range");
    const auto top_nb = g.neighbors(top);
    if (top_nb.size() != 2 || !g.adjacent(top_nb[0], top_nb[1])) {
        reject("top must have two adjacent neighbours");
    }

    Leveling lv;
    std::vector<bool> placed(n, false);
    std::size_t placed_count = 0;
    auto push_level = [&](VertexList level) {
        std::sort(level.begin(), level.end());
        for (Vertex v : level) {
            if (!placed[static_cast<std::size_t>(v)]) {
                placed[static_cast<std::size_t>(v)] = true;
                ++placed_count;
            }
        }
        lv.levels.push_back(std::move(level));
    };
    push_level({top});
    push_level({top_nb[0], top_nb[1]});

    while (placed_count < n) {
        const VertexList& cur = lv.levels.back();
        // Unplaced vertices completing a clique with the current level.
        VertexList next;
        for (Vertex w : g.neighbors(cur[0])) {
            if (placed[static_cast<std::size_t>(w)]) continue;
            if (std::all_of(cur.begin() + 1, cur.end(), [&](Vertex c) { return g.adjacent(c, w); })) {
                next.push_back(w);
            }
        }
        if (next.empty()) reject("level " + std::to_string(lv.levels.size()) + " has no successor");
        if (next.size() > 2) reject("more than two vertices extend level " + std::to_string(lv.levels.size()));
        if (next.size() == 2 && !g.adjacent(next[0], next[1])) reject("level pair is not adjacent");

        if (next.size() == 2 || next.size() == n - placed_count) {
            push_level(next);
            continue;
        }
        // One new vertex p: it pairs with the unique current vertex that
        // still has neighbours beyond the levels built so far.
        const Vertex p = next[0];
        Vertex keep = kNoVertex;
        for (Vertex c : cur) {
            const bool open = std::any_of(g.neighbors(c).begin(), g.neighbors(c).end(), [&](Vertex w) {
                return w != p && !placed[static_cast<std::size_t>(w)];
            });
            if (!open) continue;
            if (keep != kNoVertex) reject("two vertices of a level continue downward");
            keep = c;
        }
        if (keep == kNoVertex) reject("no vertex of a level continues downward");
        push_level({p, keep});
    }

    lv.first.assign(n, 0);
    lv.last.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < lv.levels.size(); ++i) {
        for (Vertex v : lv.levels[i]) {
            const auto idx = static_cast<std::size_t>(v);
            if (!seen[idx]) lv.first[idx] = i;
            seen[idx] = true;
            lv.last[idx] = i;
        }
    }
    return lv;
}

bool covered_by_leveling(const Leveling& lv, Vertex u, Vertex v) {
    const auto a = static_cast<std::size_t>(u);
    const auto b = static_cast<std::size_t>(v);
    const std::size_t lo = std::max(lv.first[a], lv.first[b]);
    const std::size_t hi = std::min(lv.last[a], lv.last[b]);
    return lo <= hi + 1;
}

BorderingGraph bordering_graph(const Graph& g, const Leveling& lv) {
    BorderingGraph bg;
    bg.n = g.size();
    bg.top = lv.top();

    std::set<Edge> constraints;
    for (const Edge& e : g.edges()) {
        if (e.u == bg.top || e.v == bg.top) continue;
        if (!covered_by_leveling(lv, e.u, e.v)) constraints.insert(e);
    }
    for (std::size_t i = 1; i < lv.levels.size(); ++i) {
        const VertexList& level = lv.levels[i];
        if (level.size() == 2) constraints.insert({std::min(level[0], level[1]), std::max(level[0], level[1])});
    }
    bg.constraints.assign(constraints.begin(), constraints.end());

    std::vector<VertexList> adj(bg.n);
    for (const Edge& e : bg.constraints) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    bg.color.assign(bg.n, -1);
    bg.component_of.assign(bg.n, 0);
    for (std::size_t s = 0; s < bg.n; ++s) {
        if (static_cast<Vertex>(s) == bg.top || bg.color[s] != -1) continue;
        VertexList comp;
        std::queue<Vertex> q;
        q.push(static_cast<Vertex>(s));
        bg.color[s] = 0;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            comp.push_back(v);
            bg.component_of[static_cast<std::size_t>(v)] = bg.components.size();
            for (Vertex w : adj[static_cast<std::size_t>(v)]) {
                auto& cw = bg.color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - bg.color[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (cw == bg.color[static_cast<std::size_t>(v)]) {
                    reject("chain constraints contain an odd cycle");
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        bg.components.push_back(std::move(comp));
    }
    return bg;
}

std::size_t bordering_count(const BorderingGraph& bg) {
    if (bg.components.empty()) return 1;
    if (bg.components.size() > 63) throw std::length_error("too many bordering components");
    return std::size_t{1} << (bg.components.size() - 1);
}

Bordering make_bordering(const BorderingGraph& bg, const std::vector<bool>& flipped) {
    Bordering b;
    b.side.assign(bg.n, Side::Left);
    for (std::size_t v = 0; v < bg.n; ++v) {
        if (static_cast<Vertex>(v) == bg.top) continue;
        const bool right = (bg.color[v] == 1) != flipped.at(bg.component_of[v]);
        b.side[v] = right ? Side::Right : Side::Left;
    }
    return b;
}

std::vector<Bordering> enumerate_borderings(const BorderingGraph& bg, std::size_t limit) {
    const std::size_t count = bordering_count(bg);
    if (count > limit) throw std::length_error("bordering enumeration exceeds limit");
    std::vector<Bordering> out;
    out.reserve(count);
    std::vector<bool> flipped(bg.components.size(), false);
    for (std::size_t mask = 0; mask < count; ++mask) {
        for (std::size_t c = 1; c < flipped.size(); ++c) flipped[c] = (mask >> (c - 1)) & 1u;
        out.push_back(make_bordering(bg, flipped));
    }
    return out;
}

std::pair<VertexList, VertexList> tower_chains(const Leveling& lv, const Bordering& b) {
    VertexList left, right;
    const Vertex top = lv.top();
    for (std::size_t v = 0; v < lv.first.size(); ++v) {
        if (static_cast<Vertex>(v) == top) continue;
        (b.side[v] == Side::Left ? left : right).push_back(static_cast<Vertex>(v));
    }
    auto by_level = [&](Vertex a, Vertex c) {
        const auto la = lv.first[static_cast<std::size_t>(a)];
        const auto lc = lv.first[static_cast<std::size_t>(c)];
        return la != lc ? la < lc : a < c;
    };
    std::sort(left.begin(), left.end(), by_level);
    std::sort(right.begin(), right.end(), by_level);
    left.insert(left.begin(), top);
    right.insert(right.begin(), top);
    return {left, right};
}

std::optional<CycleCandidate> tower_hamiltonian(const Graph& g, const Leveling& lv, const Bordering& b) {
    auto [left, right] = tower_chains(lv, b);
    VertexList order = left;
    order.insert(order.end(), right.rbegin(), right.rend() - 1);
    if (!is_cycle_in_graph(g, order)) return std::nullopt;
    return canonicalize(order);
}

bool check_strong_ordering(const Graph& g, const CycleCandidate& h) {
    const std::size_t n = g.size();
    if (!is_cycle_in_graph(g, h)) return false;
    const auto order = h.order();

    auto on_cycle = [&](Vertex a, Vertex b) {
        const auto ia = static_cast<std::size_t>(std::find(order.begin(), order.end(), a) - order.begin());
        return order[(ia + 1) % n] == b || order[(ia + n - 1) % n] == b;
    };
    std::vector<Edge> residual;
    for (const Edge& e : g.edges()) {
        if (!on_cycle(e.u, e.v)) residual.push_back(e);
    }
    if (residual.empty()) return true;

    std::vector<std::size_t> rdeg(n, 0);
    for (const Edge& e : residual) {
        ++rdeg[static_cast<std::size_t>(e.u)];
        ++rdeg[static_cast<std::size_t>(e.v)];
    }
    VertexList active;
    for (std::size_t v = 0; v < n; ++v) {
        if (rdeg[v] > 0) active.push_back(static_cast<Vertex>(v));
    }
    const Graph rest = induced_subgraph(Graph(n, residual), active).graph;
    if (!is_connected(rest)) return false;

    for (std::size_t t = 0; t < n; ++t) {
        if (rdeg[t] != 0) continue;
        // Walk the cycle from the candidate top.
        const auto start = static_cast<std::size_t>(
            std::find(order.begin(), order.end(), static_cast<Vertex>(t)) - order.begin());
        std::vector<std::size_t> pos(n);
        for (std::size_t k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[(start + k) % n])] = k;

        // Chains are positions 1..j and j+1..n-1; every residual edge must cross.
        std::size_t lo = 1, hi = n - 2;
        for (const Edge& e : residual) {
            const auto a = std::min(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
            const auto b = std::max(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
            if (a == 0) {
                lo = n;
                break;
            }
            lo = std::max(lo, a);
            hi = std::min(hi, b - 1);
        }
        for (std::size_t j = lo; j <= hi && j < n; ++j) {
            // Besides the top, only the chain bottoms may lack chords.
            bool bottoms_only = true;
            for (std::size_t v = 0; v < n; ++v) {
                if (v != t && rdeg[v] == 0 && pos[v] != j && pos[v] != j + 1) bottoms_only = false;
            }
            if (!bottoms_only) continue;

            VertexList u_chain, w_chain;  // both ordered from the top
            for (std::size_t k = 1; k <= j; ++k) u_chain.push_back(order[(start + k) % n]);
            for (std::size_t k = n - 1; k > j; --k) w_chain.push_back(order[(start + k) % n]);
            bool strong = true;
            for (std::size_t a = 0; a < u_chain.size() && strong; ++a) {
                for (std::size_t a2 = a + 1; a2 < u_chain.size() && strong; ++a2) {
                    for (std::size_t b2 = 1; b2 < w_chain.size() && strong; ++b2) {
                        if (!g.adjacent(u_chain[a], w_chain[b2])) continue;
                        for (std::size_t b = 0; b < b2; ++b) {
                            if (g.adjacent(u_chain[a2], w_chain[b]) &&
                                !(g.adjacent(u_chain[a2], w_chain[b2]) && g.adjacent(u_chain[a], w_chain[b]))) {
                                strong = false;
                                break;
                            }
                        }
                    }
                }
            }
            if (strong) return true;
        }
    }
    return false;
}

std::vector<CycleCandidate> solve_tower(const Graph& g) {
    if (g.size() < 3) reject("fewer than 3 vertices");
    std::set<CycleCandidate> found;
    bool leveled = false;
    for (Vertex top : tower_top_candidates(g)) {
        try {
            const Leveling lv = compute_leveling(g, top);
            const BorderingGraph bg = bordering_graph(g, lv);
            leveled = true;
            for (const Bordering& b : enumerate_borderings(bg)) {
                if (auto c = tower_hamiltonian(g, lv, b)) found.insert(*c);
            }
        } catch (const RecognitionError&) {
        }
    }
    if (!leveled) reject("no top candidate admits a leveling");
    return {found.begin(), found.end()};
}

}  // namespace vgr
