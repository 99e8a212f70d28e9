#include "vgr/geometry.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <random>
#include <sstream>

namespace vgr {

namespace {

using Wide = __int128;

constexpr double kGrid = 16777216.0;

Wide cross(const Point& a, const Point& b, const Point& c) {
    return static_cast<Wide>(b.x - a.x) * static_cast<Wide>(c.y - a.y) -
           static_cast<Wide>(b.y - a.y) * static_cast<Wide>(c.x - a.x);
}

// Collinear p lies on the closed segment [a, b].
bool within_box(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

// Collinear p lies strictly between a and b.
bool strictly_between(const Point& a, const Point& b, const Point& p) {
    return within_box(a, b, p) && p != a && p != b;
}

// The standard distributions are implementation-defined; these are not,
// which keeps generator output identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t r = 0;
        do {
            r = engine_();
        } while (r >= limit);
        return lo + static_cast<std::size_t>(r % span);
    }

    bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

private:
    std::mt19937_64 engine_;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

Point to_grid(Vec2 v) {
    return {static_cast<std::int64_t>(std::llround(v.x * kGrid)),
            static_cast<std::int64_t>(std::llround(v.y * kGrid))};
}

double angle_at(Vec2 corner, Vec2 a, Vec2 b) {
    const double ax = a.x - corner.x, ay = a.y - corner.y;
    const double bx = b.x - corner.x, by = b.y - corner.y;
    return std::acos(std::clamp((ax * bx + ay * by) / (std::hypot(ax, ay) * std::hypot(bx, by)),
                                -1.0, 1.0));
}

// k sorted positions in [-0.96, 0.96], consecutive ones at least
// 0.35 / (k + 1) apart: uniform draws on the shortened range, then each
// shifted by its rank times the gap.
std::vector<double> spread_positions(Rng& rng, std::size_t k) {
    const double gap = 0.35 / static_cast<double>(k + 1);
    const double slack = 1.92 - gap * static_cast<double>(k > 0 ? k - 1 : 0);
    std::vector<double> s(k);
    for (auto& v : s) v = rng.uniform(0.0, slack);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < k; ++i) s[i] += -0.96 + gap * static_cast<double>(i);
    return s;
}

struct ChainShape {
    double alpha = 0.0;  // tangent angle at both ends, measured from the chord
    double power = 2.0;  // bulge profile 1 - |s|^power
};

// Interior points of a concave chain from p to q bulging to the left of
// p -> q (the interior side of a counterclockwise polygon).
std::vector<Vec2> bulged_chain(Rng& rng, Vec2 p, Vec2 q, std::size_t k, ChainShape shape) {
    const double len = std::hypot(q.x - p.x, q.y - p.y);
    const Vec2 dir{(q.x - p.x) / len, (q.y - p.y) / len};
    const Vec2 normal{-dir.y, dir.x};
    const Vec2 mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
    const double depth = std::tan(shape.alpha) * (len / 2) / shape.power;
    std::vector<Vec2> out;
    for (double s : spread_positions(rng, k)) {
        const double h = depth * (1.0 - std::pow(std::abs(s), shape.power));
        out.push_back({mid.x + s * (len / 2) * dir.x + h * normal.x,
                       mid.y + s * (len / 2) * dir.y + h * normal.y});
    }
    return out;
}

bool has_convex_count(const Polygon& poly, std::size_t count) {
    return convex_vertices(poly).size() == count;
}

}  // namespace

// ── Predicates ──────────────────────────────────────────────────────

int orientation(const Point& a, const Point& b, const Point& c) {
    const Wide v = cross(a, b, c);
    return (v > 0) - (v < 0);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
           (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b));
}

Location locate(const Polygon& poly, const Point& q, std::int64_t scale) {
    const std::size_t n = poly.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a{poly[i].x * scale, poly[i].y * scale};
        const Point b{poly[(i + 1) % n].x * scale, poly[(i + 1) % n].y * scale};
        const int o = orientation(a, b, q);
        if (o == 0 && within_box(a, b, q)) return Location::Boundary;
        if (a.y <= q.y) {
            if (b.y > q.y && o > 0) ++winding;
        } else if (b.y <= q.y && o < 0) {
            --winding;
        }
    }
    return winding != 0 ? Location::Inside : Location::Outside;
}

std::int64_t twice_signed_area(const Polygon& poly) {
    Wide sum = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        sum += static_cast<Wide>(a.x) * b.y - static_cast<Wide>(b.x) * a.y;
    }
    return static_cast<std::int64_t>(sum);
}

std::optional<std::string> polygon_defect(const Polygon& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return "fewer than 3 vertices";
    std::vector<Point> sorted = poly.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "duplicate point";
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]) == 0) {
            return "three consecutive collinear vertices at " + std::to_string(i);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) {
                return "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
            }
        }
    }
    return std::nullopt;
}

bool in_general_position(const Polygon& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (orientation(poly[i], poly[j], poly[k]) == 0) return false;
            }
        }
    }
    return true;
}

VertexList convex_vertices(const Polygon& poly) {
    const std::size_t n = poly.size();
    const int sense = twice_signed_area(poly) > 0 ? 1 : -1;
    VertexList out;
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]) == sense) {
            out.push_back(static_cast<Vertex>(i));
        }
    }
    return out;
}

bool segment_inside(const Polygon& poly, std::size_t i, std::size_t j) {
    const std::size_t n = poly.size();
    if (i == j) return false;
    if ((i + 1) % n == j || (j + 1) % n == i) return true;
    const Point& a = poly[i];
    const Point& b = poly[j];
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 = (k + 1) % n;
        const bool shares = k == i || k == j || k2 == i || k2 == j;
        if (shares) {
            // The edge's far endpoint may still sit on the open chord.
            for (std::size_t end : {k, k2}) {
                if (end == i || end == j) continue;
                if (orientation(a, b, poly[end]) == 0 && strictly_between(a, b, poly[end])) {
                    return false;
                }
            }
            continue;
        }
        if (segments_intersect(a, b, poly[k], poly[k2])) return false;
    }
    return locate(poly, {a.x + b.x, a.y + b.y}, 2) == Location::Inside;
}

Graph visibility_graph(const Polygon& poly) {
    if (auto defect = polygon_defect(poly)) {
        throw std::invalid_argument("polygon is not simple: " + *defect);
    }
    std::vector<Edge> edges;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (segment_inside(poly, i, j)) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
    }
    return Graph(n, edges);
}

Graph visibility_graph(const PseudoTowerPolygon& pt) {
    const Graph full = visibility_graph(pt.polygon);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < pt.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < pt.vertices.size(); ++b) {
            if (full.adjacent(pt.vertices[a], pt.vertices[b])) {
                edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            }
        }
    }
    return Graph(pt.vertices.size(), edges);
}

CycleCandidate boundary_cycle(const Polygon& poly) {
    VertexList order(poly.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i);
    return canonicalize(order);
}

// ── Generators ──────────────────────────────────────────────────────

namespace {

// Integer edge vectors going downward, steepest first; consecutive turns
// are strictly one-sided, so every interior chain vertex is reflex.
std::vector<Point> descending_steps(Rng& rng, std::size_t count) {
    const double hi = rng.uniform(0.8, 1.5);
    const double lo = rng.uniform(0.03, hi - 0.15);
    std::vector<Point> steps;
    while (steps.size() < count) {
        const double phi = rng.uniform(lo, hi);
        const double len = rng.uniform(0.35, 1.0) * 4000.0;
        const Point s{std::max<std::int64_t>(1, std::llround(len * std::cos(phi))),
                      std::max<std::int64_t>(1, std::llround(len * std::sin(phi)))};
        const bool same_slope = std::any_of(steps.begin(), steps.end(), [&](const Point& t) {
            return static_cast<Wide>(s.y) * t.x == static_cast<Wide>(t.y) * s.x;
        });
        if (!same_slope) steps.push_back(s);
    }
    std::sort(steps.begin(), steps.end(), [](const Point& a, const Point& b) {
        return static_cast<Wide>(a.y) * b.x > static_cast<Wide>(b.y) * a.x;
    });
    return steps;
}

Polygon tower_attempt(Rng& rng, std::size_t n) {
    const std::size_t left_count = rng.index(1, n - 2);
    const std::size_t right_count = n - 1 - left_count;
    const auto left = descending_steps(rng, left_count);
    const auto right = descending_steps(rng, right_count);

    Polygon poly;
    poly.points.push_back({0, 0});
    Point cur{0, 0};
    for (const Point& s : left) {
        cur = {cur.x - s.x, cur.y - s.y};
        poly.points.push_back(cur);
    }
    std::vector<Point> right_pts;
    cur = {0, 0};
    for (const Point& s : right) {
        cur = {cur.x + s.x, cur.y - s.y};
        right_pts.push_back(cur);
    }
    poly.points.insert(poly.points.end(), right_pts.rbegin(), right_pts.rend());
    return poly;
}

bool valid_tower(const Polygon& poly) {
    if (polygon_defect(poly) || twice_signed_area(poly) <= 0) return false;
    if (!has_convex_count(poly, 3) || !in_general_position(poly)) return false;
    const auto convex = convex_vertices(poly);
    return convex[0] == 0;
}

}  // namespace

Polygon gen_tower(std::size_t n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("tower needs at least 4 vertices");
    Rng rng(seed);
    for (;;) {
        Polygon poly = tower_attempt(rng, n);
        if (valid_tower(poly)) return poly;
    }
}

PseudoTowerPolygon gen_pseudo_tower(std::size_t n, std::uint64_t seed) {
    if (n < 5) throw std::invalid_argument("pseudo-tower needs at least 5 vertices");
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (;;) {
        const std::size_t hidden = rng.index(1, std::max<std::size_t>(2, n / 3));
        const Polygon tower = tower_attempt(rng, n + hidden);
        if (!valid_tower(tower)) continue;
        const Graph g = visibility_graph(tower);

        // Chains of the generating tower as polygon ids, apex excluded.
        const auto convex = convex_vertices(tower);
        const auto left_bottom = static_cast<std::size_t>(convex[1]);
        const std::size_t total = tower.size();
        VertexList left, right;
        for (std::size_t v = 1; v <= left_bottom; ++v) left.push_back(static_cast<Vertex>(v));
        for (std::size_t v = total - 1; v > left_bottom; --v) right.push_back(static_cast<Vertex>(v));

        const bool cut_right = rng.coin();
        VertexList& cut = cut_right ? right : left;
        const VertexList& full = cut_right ? left : right;
        if (cut.size() <= hidden) continue;
        cut.resize(cut.size() - hidden);
        if (g.adjacent(full.back(), cut.back())) continue;

        PseudoTowerPolygon pt{tower, {}};
        pt.vertices.push_back(0);
        for (std::size_t v = 1; v < total; ++v) {
            const auto id = static_cast<Vertex>(v);
            if (std::find(left.begin(), left.end(), id) != left.end() ||
                std::find(right.begin(), right.end(), id) != right.end()) {
                pt.vertices.push_back(id);
            }
        }
        const Graph sub = visibility_graph(pt);
        std::size_t leaves = 0;
        for (std::size_t v = 0; v < sub.size(); ++v) leaves += sub.degree(static_cast<Vertex>(v)) == 1;
        if (leaves == 1 && is_connected(sub)) return pt;
    }
}

namespace {

Polygon pseudo_triangle_attempt(Rng& rng, std::size_t n, bool degenerate) {
    const Vec2 corners[3] = {{rng.uniform(-0.35, 0.35), rng.uniform(0.7, 1.5)},
                             {rng.uniform(-1.2, -0.8), rng.uniform(-0.2, 0.2)},
                             {rng.uniform(0.8, 1.2), rng.uniform(-0.2, 0.2)}};
    double angle[3];
    for (int c = 0; c < 3; ++c) {
        angle[c] = angle_at(corners[c], corners[(c + 1) % 3], corners[(c + 2) % 3]);
    }

    // Interior vertex counts per chain (chain c runs corner c -> c+1).
    std::size_t counts[3] = {0, 0, 0};
    double weight[3];
    for (auto& w : weight) w = rng.uniform(0.05, 1.0);
    if (degenerate) weight[1] += 0.6;
    const double total = weight[0] + weight[1] + weight[2];
    for (std::size_t i = 0; i + 3 < n; ++i) {
        double r = rng.uniform(0.0, total);
        std::size_t c = 0;
        while (c < 2 && r >= weight[c]) r -= weight[c++];
        ++counts[c];
    }

    Polygon poly;
    for (int c = 0; c < 3; ++c) {
        const int d = (c + 1) % 3;
        ChainShape shape;
        const double cap = 0.47 * std::min(angle[c], angle[d]);
        if (degenerate) {
            shape.alpha = cap * rng.uniform(0.75, 0.99);
            shape.power = c == 1 ? rng.uniform(1.05, 1.6) : rng.uniform(1.2, 3.0);
        } else {
            shape.alpha = cap * rng.uniform(0.2, 1.0);
            shape.power = rng.uniform(1.1, 3.0);
        }
        poly.points.push_back(to_grid(corners[c]));
        for (const Vec2& v : bulged_chain(rng, corners[c], corners[d], counts[c], shape)) {
            poly.points.push_back(to_grid(v));
        }
    }
    return poly;
}

bool is_degenerate(const Polygon& poly, const Graph& g) {
    const auto joints = convex_vertices(poly);
    std::size_t min_degree = g.size();
    for (Vertex j : joints) min_degree = std::min(min_degree, g.degree(j));
    for (Vertex j : joints) {
        if (g.degree(j) != min_degree) continue;
        if (common_bottom_vertices(g, chain_layout(poly, j)).size() != 1) return false;
    }
    return true;
}

}  // namespace

Polygon gen_pseudo_triangle(std::size_t n, std::uint64_t seed, bool degenerate) {
    if (n < 3) throw std::invalid_argument("pseudo-triangle needs at least 3 vertices");
    if (degenerate && n < 5) {
        throw std::invalid_argument("degenerate pseudo-triangle needs at least 5 vertices");
    }
    Rng rng(seed ^ 0x2545f4914f6cdd1dull);
    const std::size_t max_attempts = degenerate ? 20000 : 100000;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        Polygon poly = pseudo_triangle_attempt(rng, n, degenerate);
        if (polygon_defect(poly) || twice_signed_area(poly) <= 0) continue;
        if (!has_convex_count(poly, 3) || !in_general_position(poly)) continue;
        if (convex_vertices(poly)[0] != 0) continue;
        if (degenerate && !is_degenerate(poly, visibility_graph(poly))) continue;
        return poly;
    }
    throw std::invalid_argument("could not generate the requested pseudo-triangle");
}

Polygon gen_convex(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("convex polygon needs at least 3 vertices");
    Rng rng(seed ^ 0xbf58476d1ce4e5b9ull);
    for (;;) {
        std::vector<double> theta(n);
        for (auto& t : theta) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        std::sort(theta.begin(), theta.end());
        const double rx = rng.uniform(0.5, 1.0);
        const double ry = rng.uniform(0.5, 1.0);
        Polygon poly;
        for (double t : theta) poly.points.push_back(to_grid({rx * std::cos(t), ry * std::sin(t)}));
        if (polygon_defect(poly) || twice_signed_area(poly) <= 0) continue;
        if (has_convex_count(poly, n) && in_general_position(poly)) return poly;
    }
}

// ── Pseudo-triangle ground truth ────────────────────────────────────

ChainLayout chain_layout(const Polygon& poly, Vertex top) {
    const auto joints = convex_vertices(poly);
    if (joints.size() != 3 || std::find(joints.begin(), joints.end(), top) == joints.end()) {
        throw std::invalid_argument("top must be one of exactly three convex vertices");
    }
    const auto n = static_cast<Vertex>(poly.size());
    auto is_joint = [&](Vertex v) { return std::find(joints.begin(), joints.end(), v) != joints.end(); };
    ChainLayout layout;
    Vertex v = top;
    layout.left.push_back(v);
    do {
        v = (v + 1) % n;
        layout.left.push_back(v);
    } while (!is_joint(v));
    layout.bottom.push_back(v);
    do {
        v = (v + 1) % n;
        layout.bottom.push_back(v);
    } while (!is_joint(v));
    v = top;
    layout.right.push_back(v);
    do {
        v = (v + n - 1) % n;
        layout.right.push_back(v);
    } while (!is_joint(v));
    return layout;
}

VertexList common_bottom_vertices(const Graph& g, const ChainLayout& layout) {
    auto sees_any = [&](Vertex w, const VertexList& chain) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            if (chain[i] != w && g.adjacent(w, chain[i])) return true;
        }
        return false;
    };
    VertexList out;
    for (Vertex w : layout.bottom) {
        if (sees_any(w, layout.left) && sees_any(w, layout.right)) out.push_back(w);
    }
    return out;
}

// ── File formats ────────────────────────────────────────────────────

Polygon parse_polygon(std::istream& in, VertexList* keep) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    Polygon poly;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::istringstream fields(line.substr(first));
        if (line[first] == '#') {
            std::string hash, word;
            fields >> hash >> word;
            if (hash == "#" && word == "keep" && keep) {
                keep->clear();
                long long id = 0;
                while (fields >> id) keep->push_back(static_cast<Vertex>(id));
                if (!fields.eof()) throw ParseError(line_no, "malformed keep list");
            }
            continue;
        }
        if (n < 0) {
            std::string extra;
            if (!(fields >> n) || (fields >> extra) || n < 3) {
                throw ParseError(line_no, "expected vertex count n >= 3");
            }
            continue;
        }
        Point p;
        std::string extra;
        if (!(fields >> p.x >> p.y) || (fields >> extra)) {
            throw ParseError(line_no, "expected point \"x y\"");
        }
        if (std::llabs(p.x) > (1ll << 40) || std::llabs(p.y) > (1ll << 40)) {
            throw ParseError(line_no, "coordinate out of range");
        }
        if (static_cast<long long>(poly.size()) >= n) {
            throw ParseError(line_no, "more points than declared");
        }
        poly.points.push_back(p);
    }
    if (n < 0) throw ParseError(line_no + 1, "missing vertex count");
    if (static_cast<long long>(poly.size()) != n) {
        throw ParseError(line_no + 1, "expected " + std::to_string(n) + " points");
    }
    if (keep) {
        for (Vertex v : *keep) {
            if (v < 0 || v >= n) throw ParseError(line_no, "keep id out of range");
        }
    }
    return poly;
}

Polygon parse_polygon(const std::string& text, VertexList* keep) {
    std::istringstream in(text);
    return parse_polygon(in, keep);
}

void write_polygon(std::ostream& out, const Polygon& poly) {
    out << poly.size() << '\n';
    for (const Point& p : poly.points) out << p.x << ' ' << p.y << '\n';
}

void write_pseudo_tower(std::ostream& out, const PseudoTowerPolygon& pt) {
    out << "# keep";
    for (Vertex v : pt.vertices) out << ' ' << v;
    out << '\n';
    write_polygon(out, pt.polygon);
}

std::string render_svg(const Polygon& poly, const Graph* g) {
    std::int64_t min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
    for (const Point& p : poly.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double w = std::max<double>(1.0, static_cast<double>(max_x - min_x));
    const double h = std::max<double>(1.0, static_cast<double>(max_y - min_y));
    const double mx = 0.05 * w;
    const double my = 0.05 * h;
    const double stroke = 0.004 * std::max(w, h);

    // SVG's y axis points down; flip so the drawing matches the coordinates.
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << static_cast<double>(min_x) - mx << ' ' << -static_cast<double>(max_y) - my << ' '
        << w + 2 * mx << ' ' << h + 2 * my << "\">\n";
    out << "  <path d=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        out << (i == 0 ? "M " : " L ") << poly[i].x << ' ' << -poly[i].y;
    }
    out << " Z\" fill=\"#f2f2e9\" stroke=\"#222222\" stroke-width=\"" << 2 * stroke << "\"/>\n";
    if (g) {
        for (const Edge& e : g->edges()) {
            const Point& a = poly[static_cast<std::size_t>(e.u)];
            const Point& b = poly[static_cast<std::size_t>(e.v)];
            out << "  <line x1=\"" << a.x << "\" y1=\"" << -a.y << "\" x2=\"" << b.x << "\" y2=\""
                << -b.y << "\" stroke=\"#3b6ea5\" stroke-width=\"" << stroke << "\"/>\n";
        }
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
        out << "  <text x=\"" << poly[i].x << "\" y=\"" << -poly[i].y << "\" font-size=\""
            << 8 * stroke << "\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace vgr
