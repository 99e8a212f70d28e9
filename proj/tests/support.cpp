#include "support.h"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fixture {

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> list;
    for (auto [u, v] : edges) list.push_back({u, v});
    return Graph(n, list);
}

Polygon t5_polygon() { return Polygon{{{0, 4}, {-1, 2}, {-3, 0}, {3, 0}, {1, 2}}}; }

Graph t5_graph() {
    return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}, {1, 3}, {2, 4}});
}

Graph t5_pendant_graph() {
    return make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}, {1, 3}, {2, 4}, {2, 5}, {5, 6}});
}

Polygon pt6_polygon() { return Polygon{{{0, 60}, {-8, 30}, {-20, 0}, {-5, 6}, {20, 0}, {8, 30}}}; }

Graph k3() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Graph k33() {
    return make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }

}  // namespace fixture

namespace oracle {

namespace {

using Wide = __int128;

Wide cross(const vgr::Point& o, const vgr::Point& a, const vgr::Point& b) {
    return static_cast<Wide>(a.x - o.x) * (b.y - o.y) - static_cast<Wide>(a.y - o.y) * (b.x - o.x);
}

bool on_segment(const vgr::Point& p, const vgr::Point& a, const vgr::Point& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

// Closed segments share at least one point.
bool touch(const vgr::Point& a, const vgr::Point& b, const vgr::Point& c, const vgr::Point& d) {
    const Wide d1 = cross(a, b, c), d2 = cross(a, b, d), d3 = cross(c, d, a), d4 = cross(c, d, b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    return (d1 == 0 && on_segment(c, a, b)) || (d2 == 0 && on_segment(d, a, b)) ||
           (d3 == 0 && on_segment(a, c, d)) || (d4 == 0 && on_segment(b, c, d));
}

}  // namespace

Graph visibility(const Polygon& poly) {
    const std::size_t n = poly.size();
    std::vector<vgr::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) {
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
                continue;
            }
            bool clear = true;
            for (std::size_t k = 0; k < n && clear; ++k) {
                const std::size_t l = (k + 1) % n;
                if (k == i || k == j || l == i || l == j) {
                    // Edges at an endpoint: only a vertex lying on the open segment blocks.
                    for (std::size_t w : {k, l}) {
                        if (w == i || w == j) continue;
                        if (cross(poly[i], poly[j], poly[w]) == 0 && on_segment(poly[w], poly[i], poly[j])) {
                            clear = false;
                        }
                    }
                    continue;
                }
                if (touch(poly[i], poly[j], poly[k], poly[l])) clear = false;
            }
            if (!clear) continue;
            // Leave i into its interior angle (counterclockwise polygon).
            const vgr::Point& a = poly[(i + n - 1) % n];
            const vgr::Point& b = poly[(i + 1) % n];
            const vgr::Point& p = poly[i];
            const vgr::Point& q = poly[j];
            const bool convex = cross(a, p, b) > 0;
            const bool inside = convex ? (cross(p, b, q) > 0 && cross(p, q, a) > 0)
                                       : !(cross(p, q, b) >= 0 && cross(p, a, q) >= 0);
            if (inside) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    }
    return Graph(n, edges);
}

std::set<VertexList> hamiltonian_cycles(const Graph& g) {
    const std::size_t n = g.size();
    std::set<VertexList> out;
    if (n < 3) return out;
    VertexList path{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    std::function<void()> extend = [&] {
        if (path.size() == n) {
            if (g.adjacent(path.back(), 0) && path[1] < path.back()) out.insert(path);
            return;
        }
        for (vgr::Vertex w : g.neighbors(path.back())) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            extend();
            path.pop_back();
            used[static_cast<std::size_t>(w)] = false;
        }
    };
    extend();
    return out;
}

std::size_t bordering_colorings(const vgr::BorderingGraph& bg) {
    VertexList nodes;
    for (std::size_t v = 0; v < bg.n; ++v) {
        if (static_cast<vgr::Vertex>(v) != bg.top) nodes.push_back(static_cast<vgr::Vertex>(v));
    }
    std::vector<int> index(bg.n, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) index[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nodes.size()); ++mask) {
        bool proper = true;
        for (const vgr::Edge& e : bg.constraints) {
            const auto bu = (mask >> index[static_cast<std::size_t>(e.u)]) & 1u;
            const auto bv = (mask >> index[static_cast<std::size_t>(e.v)]) & 1u;
            if (bu == bv) proper = false;
        }
        if (proper) ++count;
    }
    return count / 2;
}

std::size_t constraint_components(const vgr::BorderingGraph& bg) {
    std::vector<std::size_t> parent(bg.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const vgr::Edge& e : bg.constraints) {
        parent[find(static_cast<std::size_t>(e.u))] = find(static_cast<std::size_t>(e.v));
    }
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < bg.n; ++v) {
        if (static_cast<vgr::Vertex>(v) != bg.top) roots.insert(find(v));
    }
    return roots.size();
}

std::pair<VertexList, VertexList> pseudo_tower_chains(const vgr::PseudoTowerPolygon& pt) {
    // Polygon vertex 0 is the apex and the second convex vertex ends the
    // first chain; kept vertices after it climb the other chain.
    const vgr::Vertex left_bottom = vgr::convex_vertices(pt.polygon)[1];
    VertexList left{0}, right{0};
    for (std::size_t i = 1; i < pt.vertices.size(); ++i) {
        (pt.vertices[i] <= left_bottom ? left : right).push_back(static_cast<vgr::Vertex>(i));
    }
    std::reverse(right.begin() + 1, right.end());
    return {left, right};
}

std::set<VertexList> verified_cycles(const Graph& g) {
    std::set<VertexList> out;
    for (const VertexList& cycle : hamiltonian_cycles(g)) {
        const std::size_t n = cycle.size();
        bool ok = false;
        for (std::size_t r = 0; r < n && !ok; ++r) {
            VertexList rotated(cycle.begin() + static_cast<std::ptrdiff_t>(r), cycle.end());
            rotated.insert(rotated.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(r));
            for (auto [left, right] : vgr::bottom_joint_placements(g, rotated)) {
                if (vgr::verify_candidate(g, vgr::solution_from_cycle(rotated, rotated[0], left, right))) {
                    ok = true;
                    break;
                }
            }
        }
        if (ok) out.insert(cycle);
    }
    return out;
}

VertexList canonical(VertexList order) {
    const auto n = order.size();
    if (n < 3) return order;
    const auto at = static_cast<std::size_t>(std::min_element(order.begin(), order.end()) - order.begin());
    std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(at), order.end());
    if (order.back() < order[1]) std::reverse(order.begin() + 1, order.end());
    return order;
}

}  // namespace oracle

namespace gen {

Graph connected_graph(Source& src, std::size_t n, double p) {
    std::set<std::pair<int, int>> pairs;
    VertexList perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), src.engine());
    for (std::size_t i = 1; i < n; ++i) {
        const int a = perm[i], b = perm[src.below(i)];
        pairs.insert({std::min(a, b), std::max(a, b)});
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (src.coin(p)) pairs.insert({static_cast<int>(u), static_cast<int>(v)});
        }
    }
    return fixture::make_graph(n, {pairs.begin(), pairs.end()});
}

Graph toggle_pair(const Graph& g, Source& src) {
    const std::size_t n = g.size();
    std::set<std::pair<int, int>> pairs;
    for (const vgr::Edge& e : g.edges()) pairs.insert({e.u, e.v});
    int u = 0, v = 0;
    while (u == v) {
        u = static_cast<int>(src.below(n));
        v = static_cast<int>(src.below(n));
    }
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (!pairs.erase(key)) pairs.insert(key);
    return fixture::make_graph(n, {pairs.begin(), pairs.end()});
}

}  // namespace gen
