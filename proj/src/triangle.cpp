#include "vgr/triangle.h"

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <thread>

namespace vgr {

namespace {

using Mask = std::vector<bool>;

Mask mask_of(std::size_t n, const VertexList& vs) {
    Mask m(n, false);
    for (Vertex v : vs) m[static_cast<std::size_t>(v)] = true;
    return m;
}

bool is_path(const Graph& g, const VertexList& path) {
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!g.adjacent(path[i - 1], path[i])) return false;
    }
    return true;
}

// Positions i < j on the list are adjacent in g only when j = i + 1.
bool chord_free(const Graph& g, const VertexList& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 2; j < chain.size(); ++j) {
            if (g.adjacent(chain[i], chain[j])) return false;
        }
    }
    return true;
}

VertexList lift(const VertexList& local, const Subgraph& sub) {
    VertexList out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(sub.parent(v));
    return out;
}

// The ordered path when g is an induced path with `end` as an endpoint.
std::optional<VertexList> as_path_to(const Graph& g, Vertex end) {
    const std::size_t n = g.size();
    if (g.edge_count() + 1 != n || g.degree(end) > 1) return std::nullopt;
    VertexList path{end};
    Vertex prev = kNoVertex;
    Vertex cur = end;
    while (path.size() < n) {
        Vertex next = kNoVertex;
        for (Vertex w : g.neighbors(cur)) {
            if (w != prev) next = w;
        }
        if (next == kNoVertex || g.degree(next) > 2) return std::nullopt;
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

// ── Candidate generation ────────────────────────────────────────────

VertexList top_joint_candidates(const Graph& g) {
    VertexList out;
    if (g.size() == 0) return out;
    std::size_t best = g.size();
    for (std::size_t v = 0; v < g.size(); ++v) best = std::min(best, g.degree(static_cast<Vertex>(v)));
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.degree(static_cast<Vertex>(v)) == best) out.push_back(static_cast<Vertex>(v));
    }
    if (out.size() > 3) {
        throw RecognitionError("not a pseudo-triangle visibility graph: " + std::to_string(out.size()) +
                               " vertices of minimum degree");
    }
    return out;
}

VertexList chain_neighborhood(const Graph& g, const Chain& chain, Vertex p) {
    VertexList out;
    for (Vertex v : chain.vertices) {
        if (g.adjacent(p, v)) out.push_back(v);
    }
    return out;
}

std::vector<Edge> split_edge_candidates(const Graph& g, Vertex top) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (e.u == top || e.v == top) continue;
        out.push_back(e);
        out.push_back({e.v, e.u});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> degenerate_split(const Graph& g, Vertex top) {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto w0 = static_cast<Vertex>(v);
        if (w0 == top) continue;
        for (Vertex w1 : g.neighbors(w0)) {
            if (w1 != top) out.push_back({w0, w1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ── Decomposition ───────────────────────────────────────────────────

namespace {

// Side bookkeeping for LevelStop::Sided. Every level vertex after the top
// is put on side 0 or 1; a side that has reached X contributes nothing
// more to Y, and its non-X vertices below are dropped from the leveling.
struct SideTracker {
    std::vector<int> side;
    std::array<Vertex, 2> prev_head;
    std::array<bool, 2> done{false, false};

    SideTracker(std::size_t n, Vertex top) : side(n, -1), prev_head{top, top} {}

    int of(Vertex v) const { return side[static_cast<std::size_t>(v)]; }
    bool finished(Vertex v) const { return of(v) >= 0 && done[static_cast<std::size_t>(of(v))]; }
    bool one_done() const { return done[0] != done[1]; }

    void put(const VertexList& cur, Vertex v, int s) {
        for (Vertex c : cur) {
            if (of(c) == s) prev_head[static_cast<std::size_t>(s)] = c;
        }
        side[static_cast<std::size_t>(v)] = s;
    }

    // Two new vertices, one per side. A vertex continuing a side is not
    // adjacent to the vertex before that side's head (chains have no
    // chords); when that does not decide, the smaller id goes to side 0.
    void put_pair(const Graph& g, const VertexList& cur, const VertexList& next) {
        auto fits = [&](Vertex v, int s) { return !g.adjacent(v, prev_head[static_cast<std::size_t>(s)]); };
        auto only = [&](Vertex v, int s) { return fits(v, s) && !fits(v, 1 - s); };
        const int s0 = only(next[0], 0) ? 0 : only(next[0], 1) ? 1 : only(next[1], 0) ? 1 : 0;
        put(cur, next[0], s0);
        put(cur, next[1], 1 - s0);
    }
};

// Of a two-vertex level, the vertex that stays beside the single new
// vertex p: the one that still has unplaced neighbours other than p.
Vertex pairing_partner(const Graph& g, const VertexList& cur, Vertex p, const Mask& placed) {
    Vertex keep = kNoVertex;
    for (Vertex c : cur) {
        const auto nb = g.neighbors(c);
        const bool open = std::any_of(nb.begin(), nb.end(), [&](Vertex w) {
            return w != p && !placed[static_cast<std::size_t>(w)];
        });
        if (!open) continue;
        if (keep != kNoVertex) return kNoVertex;
        keep = c;
    }
    return keep;
}

}  // namespace

std::optional<UpperPart> extract_C(const Graph& g, Vertex top, Edge e, LevelStop stop) {
    const std::size_t n = g.size();
    if (top == e.u || top == e.v || !g.adjacent(e.u, e.v)) return std::nullopt;
    UpperPart part;
    for (Vertex x : g.neighbors(e.u)) {
        if (x != e.v && g.adjacent(x, e.v)) part.X.push_back(x);
    }
    if (part.X.empty()) return std::nullopt;
    const Mask in_x = mask_of(n, part.X);
    if (in_x[static_cast<std::size_t>(top)]) {
        part.C = part.X;
        return part;
    }

    // Tower leveling from the top with e's endpoints removed. The final
    // level is kept whole: a non-X vertex there is either above X on its
    // side or the next vertex below it, and both keep C's sides prefixes
    // of the side chains.
    const bool sided = stop == LevelStop::Sided;
    Mask placed(n, false);
    placed[static_cast<std::size_t>(e.u)] = placed[static_cast<std::size_t>(e.v)] = true;
    placed[static_cast<std::size_t>(top)] = true;
    VertexList cur{top};
    part.Y.push_back(top);
    std::size_t x_left = part.X.size();
    SideTracker sides(n, top);
    for (;;) {
        VertexList next;
        for (Vertex w : g.neighbors(cur[0])) {
            if (placed[static_cast<std::size_t>(w)]) continue;
            if (std::all_of(cur.begin() + 1, cur.end(), [&](Vertex c) { return g.adjacent(c, w); })) {
                next.push_back(w);
            }
        }
        if (next.empty() || next.size() > 2) return std::nullopt;

        // A single new vertex replaces one of a two-vertex level.
        Vertex keep = kNoVertex;
        auto choose_keep = [&](Vertex p) {
            if (sided && sides.one_done()) {
                for (Vertex c : cur) {
                    if (sides.finished(c)) keep = c;
                }
            } else {
                keep = pairing_partner(g, cur, p, placed);
            }
            return keep != kNoVertex;
        };
        if (sided) {
            if (cur.size() == 1) {
                const int s = std::max(sides.of(cur[0]), 0);
                for (std::size_t i = 0; i < next.size(); ++i) {
                    sides.put(cur, next[i], i == 0 ? s : 1 - s);
                }
            } else if (next.size() == 1) {
                if (!choose_keep(next[0])) return std::nullopt;
                sides.put(cur, next[0], sides.of(cur[0] == keep ? cur[1] : cur[0]));
            } else {
                sides.put_pair(g, cur, next);
            }
            // Below X on a finished side: outside C and not a level member.
            const std::size_t before = next.size();
            std::erase_if(next, [&](Vertex v) {
                const auto vi = static_cast<std::size_t>(v);
                if (in_x[vi] || !sides.finished(v)) return false;
                placed[vi] = true;
                return true;
            });
            if (next.empty()) return std::nullopt;
            if (next.size() < before && cur.size() == 2 && !choose_keep(next[0])) return std::nullopt;
        }
        // Past X on one side the level need not be a clique any more.
        if (next.size() == 2 && !g.adjacent(next[0], next[1]) && !(sided && (sides.done[0] || sides.done[1]))) {
            return std::nullopt;
        }

        std::size_t hits = 0;
        for (Vertex v : next) {
            const auto vi = static_cast<std::size_t>(v);
            placed[vi] = true;
            if (in_x[vi]) {
                --x_left;
                ++hits;
                if (sides.of(v) >= 0) sides.done[static_cast<std::size_t>(sides.of(v))] = true;
            } else {
                part.Y.push_back(v);
            }
        }
        if (x_left == 0) break;
        if (stop == LevelStop::FirstContact && hits > 0) break;
        if (stop == LevelStop::WholeLevel && hits == next.size()) break;
        if (sided && sides.done[0] && sides.done[1]) break;

        if (next.size() == 2 || cur.size() == 1) {
            cur = next;
            continue;
        }
        if (keep == kNoVertex && !choose_keep(next[0])) return std::nullopt;
        cur = {std::min(next[0], keep), std::max(next[0], keep)};
    }
    std::sort(part.Y.begin(), part.Y.end());
    part.C = part.Y;
    part.C.insert(part.C.end(), part.X.begin(), part.X.end());
    std::sort(part.C.begin(), part.C.end());
    return part;
}

std::optional<std::pair<VertexList, VertexList>> split_AB(const Graph& g, const VertexList& C, Edge e) {
    const std::size_t n = g.size();
    const Mask in_c = mask_of(n, C);
    if (in_c[static_cast<std::size_t>(e.u)] || in_c[static_cast<std::size_t>(e.v)]) return std::nullopt;
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (in_c[s] || comp[s] != -1) continue;
        if (count == 2) return std::nullopt;
        std::queue<Vertex> q;
        q.push(static_cast<Vertex>(s));
        comp[s] = count;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                const auto wi = static_cast<std::size_t>(w);
                if (in_c[wi] || comp[wi] != -1) continue;
                if ((v == e.u && w == e.v) || (v == e.v && w == e.u)) continue;
                comp[wi] = count;
                q.push(w);
            }
        }
        ++count;
    }
    if (count != 2) return std::nullopt;
    const int ca = comp[static_cast<std::size_t>(e.u)];
    const int cb = comp[static_cast<std::size_t>(e.v)];
    if (ca == cb) return std::nullopt;
    std::pair<VertexList, VertexList> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] == ca) out.first.push_back(static_cast<Vertex>(v));
        if (comp[v] == cb) out.second.push_back(static_cast<Vertex>(v));
    }
    return out;
}

std::optional<SplitDecomposition> decompose(const Graph& g, Vertex top, Edge e, LevelStop stop) {
    auto upper = extract_C(g, top, e, stop);
    if (!upper) return std::nullopt;
    auto lower = split_AB(g, upper->C, e);
    if (!lower) return std::nullopt;
    return SplitDecomposition{top, e, upper->C, lower->first, lower->second, upper->X, upper->Y};
}

// ── Parts ───────────────────────────────────────────────────────────

std::vector<VertexList> part_paths(const Graph& g, const VertexList& part, Vertex end) {
    std::vector<VertexList> out;
    if (part.size() == 1) {
        if (part[0] == end) out.push_back(part);
        return out;
    }
    const Subgraph sub = induced_subgraph(g, part);
    const Vertex local_end = sub.from_parent.at(static_cast<std::size_t>(end));
    if (local_end == kNoVertex) return out;
    if (auto path = as_path_to(sub.graph, local_end)) {
        out.push_back(lift(*path, sub));
        return out;
    }
    std::vector<PseudoTowerSolution> sols;
    try {
        sols = solve_pseudo_tower(sub.graph);
    } catch (const RecognitionError&) {
        return out;
    }
    std::set<VertexList> seen;
    for (const PseudoTowerSolution& s : sols) {
        for (int k = 0; k < 2; ++k) {
            const VertexList& to_end = s.chains[k];
            const VertexList& other = s.chains[1 - k];
            if (to_end.back() != local_end) continue;
            VertexList path(other.rbegin(), other.rend());
            path.insert(path.end(), to_end.begin() + 1, to_end.end());
            if (path.size() != part.size()) continue;
            VertexList lifted = lift(path, sub);
            if (seen.insert(lifted).second) out.push_back(std::move(lifted));
        }
    }
    return out;
}

std::optional<SplitChain> compute_split_chain(const Graph& g, Vertex pa, Vertex pb, const LowerPaths& lower) {
    // W runs from the A-side through e into B; the candidate W-vertices are
    // all of A and B here, filtered by the two side vertices below C.
    VertexList below = lower.a_path;
    below.insert(below.end(), lower.b_path.begin(), lower.b_path.end());
    SplitChain sc;
    for (Vertex w : below) {
        if (g.adjacent(pa, w) && g.adjacent(pb, w)) sc.common.push_back(w);
    }
    if (sc.common.empty()) return std::nullopt;
    const Vertex sa = lower.a_path.front();
    const Vertex sb = lower.b_path.back();
    const Mask common = mask_of(g.size(), sc.common);
    for (Vertex w : below) {
        if (common[static_cast<std::size_t>(w)]) continue;
        if (g.adjacent(sa, w)) sc.w_prime.push_back(w);
        if (g.adjacent(sb, w)) sc.w_second.push_back(w);
    }
    return sc;
}

namespace {

// Chain pairs of G[C] from the top, before any side is fixed.
std::vector<std::pair<VertexList, VertexList>> upper_chain_pairs(const Graph& g, const VertexList& C,
                                                                 Vertex top) {
    std::vector<std::pair<VertexList, VertexList>> out;
    if (C.size() == 1) {
        out.push_back({{top}, {top}});
        return out;
    }
    const Subgraph sub = induced_subgraph(g, C);
    const Vertex t = sub.local(top);
    const auto nb = sub.graph.neighbors(t);
    if (nb.size() == 1) {
        if (auto path = as_path_to(sub.graph, t)) {
            VertexList chain(path->rbegin(), path->rend());
            out.push_back({lift(chain, sub), {top}});
        }
        return out;
    }
    if (nb.size() != 2) return out;
    if (!sub.graph.adjacent(nb[0], nb[1])) {
        // Sides that never see each other: two induced paths below the top.
        std::array<VertexList, 2> sides;
        for (int k = 0; k < 2; ++k) {
            sides[k].push_back(top);
            Vertex prev = t;
            Vertex cur = nb[k];
            while (cur != kNoVertex) {
                sides[k].push_back(sub.parent(cur));
                Vertex next = kNoVertex;
                for (Vertex w : sub.graph.neighbors(cur)) {
                    if (w == prev || w == t) continue;
                    if (next != kNoVertex) return out;
                    next = w;
                }
                prev = cur;
                cur = next;
            }
        }
        if (sides[0].size() + sides[1].size() != C.size() + 1) return out;
        out.push_back({std::move(sides[0]), std::move(sides[1])});
        return out;
    }
    Leveling lv;
    BorderingGraph bg;
    try {
        lv = compute_leveling(sub.graph, t);
        bg = bordering_graph(sub.graph, lv);
    } catch (const RecognitionError&) {
        return out;
    }
    for (const Bordering& b : enumerate_borderings(bg, 1u << 12)) {
        auto [left, right] = tower_chains(lv, b);
        VertexList l = lift(left, sub);
        VertexList r = lift(right, sub);
        if (is_path(g, l) && is_path(g, r)) out.push_back({std::move(l), std::move(r)});
    }
    return out;
}

}  // namespace

std::vector<UpperChains> apply_bordering_constraints(const Graph& g, const SplitDecomposition& dec,
                                                     const LowerPaths& lower) {
    std::vector<UpperChains> out;
    const Vertex sa = lower.a_path.front();
    const Vertex sb = lower.b_path.back();
    for (auto& [first, second] : upper_chain_pairs(g, dec.C, dec.top)) {
        for (int flip = 0; flip < 2; ++flip) {
            UpperChains uc{flip ? second : first, flip ? first : second};
            if (!g.adjacent(uc.u_side.back(), sa) || !g.adjacent(uc.v_side.back(), sb)) continue;
            out.push_back(std::move(uc));
            if (first == second) break;
        }
    }
    return out;
}

// ── Assembly and verification ───────────────────────────────────────

PseudoTriangleSolution solution_from_cycle(std::span<const Vertex> cycle, Vertex top, Vertex left,
                                           Vertex right) {
    const std::size_t n = cycle.size();
    const auto at = [&](Vertex v) {
        return static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
    };
    // Orient the walk so that it meets `left` before `right`.
    const std::size_t t = at(top);
    std::size_t dl = (at(left) + n - t) % n;
    std::size_t dr = (at(right) + n - t) % n;
    const bool forward = dl < dr;
    auto step = [&](std::size_t k) { return cycle[forward ? (t + k) % n : (t + n - k) % n]; };
    if (!forward) {
        dl = n - dl;
        dr = n - dr;
    }
    PseudoTriangleSolution sol;
    for (std::size_t k = 0; k <= dl; ++k) sol.chains[0].vertices.push_back(step(k));
    for (std::size_t k = dl; k <= dr; ++k) sol.chains[2].vertices.push_back(step(k));
    for (std::size_t k = 0; k + dr <= n; ++k) sol.chains[1].vertices.push_back(step((n - k) % n));
    sol.joints = {top, left, right};
    sol.cycle = canonicalize(cycle);
    return sol;
}

std::vector<std::pair<Vertex, Vertex>> bottom_joint_placements(const Graph& g, std::span<const Vertex> order) {
    const std::size_t n = order.size();
    std::vector<std::pair<Vertex, Vertex>> out;
    if (n < 3) return out;
    std::vector<std::size_t> pos(g.size());
    for (std::size_t k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[k])] = k;
    // Positions a..b along the cycle, b <= n where n stands for the top again.
    auto chord_free_range = [&](std::size_t a, std::size_t b) {
        for (std::size_t k = a; k <= b; ++k) {
            for (Vertex y : g.neighbors(order[k % n])) {
                std::size_t p = pos[static_cast<std::size_t>(y)];
                if (p == 0 && b == n) p = n;
                if (p < a || p > b) continue;
                if (p + 1 != k && k + 1 != p) return false;
            }
        }
        return true;
    };
    std::size_t i_max = 1;
    while (i_max + 2 < n && chord_free_range(0, i_max + 1)) ++i_max;
    std::size_t j_min = n - 1;
    while (j_min > 2 && chord_free_range(j_min - 1, n)) --j_min;
    for (std::size_t i = i_max; i >= 1; --i) {
        for (std::size_t j = std::max(j_min, i + 1); j < n; ++j) {
            if (!chord_free_range(i, j)) break;
            out.emplace_back(order[i], order[j]);
        }
    }
    return out;
}

std::optional<PseudoTriangleSolution> assemble_hamiltonian(const Graph& g, const SplitDecomposition& dec,
                                                           const UpperChains& upper,
                                                           const LowerPaths& lower) {
    VertexList order = upper.u_side;
    order.insert(order.end(), lower.a_path.begin(), lower.a_path.end());
    order.insert(order.end(), lower.b_path.begin(), lower.b_path.end());
    order.insert(order.end(), upper.v_side.rbegin(), upper.v_side.rend() - 1);
    if (!is_cycle_in_graph(g, order)) return std::nullopt;

    const auto placements = bottom_joint_placements(g, order);
    if (placements.empty()) return std::nullopt;
    std::optional<PseudoTriangleSolution> first;
    for (const auto& [left, right] : placements) {
        PseudoTriangleSolution sol = solution_from_cycle(order, order[0], left, right);
        sol.decomposition = dec;
        if (verify_candidate(g, sol)) return sol;
        if (!first) first = std::move(sol);
    }
    return first;
}

bool verify_candidate(const Graph& g, const PseudoTriangleSolution& sol) {
    const std::size_t n = g.size();
    if (n < 3 || !is_cycle_in_graph(g, sol.cycle)) return false;
    const auto& [u, v, w] = sol.chains;
    for (const Chain* c : {&u, &v, &w}) {
        if (c->vertices.size() < 2) return false;
    }
    if (u.front() != sol.joints[0] || v.front() != sol.joints[0] || u.back() != sol.joints[1] ||
        w.front() != sol.joints[1] || w.back() != sol.joints[2] || v.back() != sol.joints[2]) {
        return false;
    }
    VertexList order = u.vertices;
    order.insert(order.end(), w.vertices.begin() + 1, w.vertices.end());
    order.insert(order.end(), v.vertices.rbegin() + 1, v.vertices.rend() - 1);
    if (order.size() != n) return false;
    try {
        if (canonicalize(order) != sol.cycle) return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (const Chain* c : {&u, &v, &w}) {
        if (!chord_free(g, c->vertices)) return false;
    }

    // Each vertex sees one contiguous run of every chain.
    for (const Chain* c : {&u, &v, &w}) {
        for (std::size_t p = 0; p < n; ++p) {
            int runs = 0;
            bool inside = false;
            for (Vertex x : c->vertices) {
                const bool hit = x == static_cast<Vertex>(p) || g.adjacent(static_cast<Vertex>(p), x);
                if (hit && !inside) ++runs;
                inside = hit;
            }
            if (runs > 1) return false;
        }
    }

    // Descending a side chain, the visible bottom-chain vertex nearest to
    // that side's joint never moves away from it.
    for (int side = 0; side < 2; ++side) {
        const Chain& s = side == 0 ? u : v;
        const std::size_t m = w.vertices.size();
        std::size_t prev = m;
        for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                const Vertex y = side == 0 ? w.vertices[k] : w.vertices[m - 1 - k];
                if (!g.adjacent(s.vertices[i], y)) continue;
                if (k > prev) return false;
                prev = k;
                break;
            }
        }
    }
    return true;
}

// ── Driver ──────────────────────────────────────────────────────────

namespace {

struct Found {
    PseudoTriangleSolution sol;
    std::size_t index;  // position of the producing candidate
};

struct Candidate {
    Vertex top;
    Edge e;
};

void run_decomposition(const Graph& g, const SplitDecomposition& dec, std::size_t index,
                       std::vector<Found>& found, SolveStats& stats);

void run_candidate(const Graph& g, const Candidate& cand, std::size_t index, std::vector<Found>& found,
                   SolveStats& stats) {
    VertexList previous_c;
    for (LevelStop stop : {LevelStop::FirstContact, LevelStop::WholeLevel, LevelStop::AllOfX, LevelStop::Sided}) {
        ++stats.candidates;
        auto upper = extract_C(g, cand.top, cand.e, stop);
        if (!upper) {
            ++stats.rejected["extract_C"];
            continue;
        }
        if (upper->C == previous_c) {
            ++stats.rejected["duplicate"];
            continue;
        }
        previous_c = upper->C;
        auto parts = split_AB(g, upper->C, cand.e);
        if (!parts) {
            ++stats.rejected["split_AB"];
            continue;
        }
        const SplitDecomposition dec{cand.top, cand.e, upper->C, parts->first, parts->second, upper->X, upper->Y};
        run_decomposition(g, dec, index, found, stats);
    }
}

void run_decomposition(const Graph& g, const SplitDecomposition& dec, std::size_t index,
                       std::vector<Found>& found, SolveStats& stats) {
    const auto a_paths = part_paths(g, dec.A, dec.e.u);
    std::vector<VertexList> b_paths = part_paths(g, dec.B, dec.e.v);
    for (auto& p : b_paths) std::reverse(p.begin(), p.end());
    if (a_paths.empty() || b_paths.empty()) {
        ++stats.rejected["parts"];
        return;
    }
    bool any_bordering = false;
    bool any_cycle = false;
    bool any_verified = false;
    for (const auto& ap : a_paths) {
        for (const auto& bp : b_paths) {
            const LowerPaths lower{ap, bp};
            for (const UpperChains& uc : apply_bordering_constraints(g, dec, lower)) {
                any_bordering = true;
                auto sol = assemble_hamiltonian(g, dec, uc, lower);
                if (!sol) continue;
                any_cycle = true;
                if (!verify_candidate(g, *sol)) continue;
                any_verified = true;
                found.push_back({std::move(*sol), index});
            }
        }
    }
    if (!any_bordering) ++stats.rejected["constraints"];
    else if (!any_cycle) ++stats.rejected["assemble"];
    else if (!any_verified) ++stats.rejected["verify"];
}

}  // namespace

std::vector<PseudoTriangleSolution> solve(const Graph& g, const SolveOptions& options, SolveStats* stats) {
    SolveStats local_stats;
    SolveStats& st = stats ? *stats : local_stats;
    if (g.size() < 3 || !is_connected(g)) return {};

    if (g.size() == 3) {
        // A triangle is its own (degenerate) pseudo-triangle.
        if (g.edge_count() != 3) return {};
        const VertexList order{0, 1, 2};
        PseudoTriangleSolution sol = solution_from_cycle(order, 0, 1, 2);
        sol.decomposition.top = 0;
        sol.decomposition.e = {1, 2};
        sol.decomposition.C = {0};
        sol.decomposition.X = {0};
        sol.decomposition.A = {1};
        sol.decomposition.B = {2};
        return {sol};
    }

    VertexList tops;
    try {
        tops = top_joint_candidates(g);
    } catch (const RecognitionError&) {
        ++st.rejected["top_joint"];
        return {};
    }
    std::vector<Candidate> cands;
    for (Vertex top : tops) {
        std::set<Edge> edges;
        for (const Edge& e : split_edge_candidates(g, top)) edges.insert(e);
        for (const Edge& e : degenerate_split(g, top)) edges.insert(e);
        for (const Edge& e : edges) cands.push_back({top, e});
    }

    const unsigned threads = std::max(1u, options.threads);
    std::vector<std::vector<Found>> found(threads);
    std::vector<SolveStats> part_stats(threads);
    auto worker = [&](unsigned k) {
        for (std::size_t i = k; i < cands.size(); i += threads) run_candidate(g, cands[i], i, found[k], part_stats[k]);
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker, k);
        for (auto& t : pool) t.join();
    }

    std::vector<Found> all;
    for (unsigned k = 0; k < threads; ++k) {
        st.candidates += part_stats[k].candidates;
        for (const auto& [stage, count] : part_stats[k].rejected) st.rejected[stage] += count;
        for (auto& f : found[k]) all.push_back(std::move(f));
    }
    std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) {
        return a.sol.cycle != b.sol.cycle ? a.sol.cycle < b.sol.cycle : a.index < b.index;
    });
    std::vector<PseudoTriangleSolution> out;
    for (auto& f : all) {
        if (out.empty() || out.back().cycle != f.sol.cycle) out.push_back(std::move(f.sol));
    }
    return out;
}

}  // namespace vgr
