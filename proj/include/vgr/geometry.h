#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vgr/graph.h"

namespace vgr {

/// Lattice point. All predicates evaluate exactly in 128-bit arithmetic,
/// so coordinates must stay within +-2^40.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Simple polygon, vertices in boundary order (counterclockwise for
/// everything the generators emit).
struct Polygon {
    std::vector<Point> points;

    std::size_t size() const noexcept { return points.size(); }
    const Point& operator[](std::size_t i) const { return points[i]; }
};

/// A tower with some bottom vertices of one chain hidden. The hidden
/// vertices still bound the region; only `vertices` become graph vertices
/// (graph vertex i is polygon vertex vertices[i]).
struct PseudoTowerPolygon {
    Polygon polygon;
    VertexList vertices;
};

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn.
int orientation(const Point& a, const Point& b, const Point& c);

/// Closed-segment intersection test (touching counts).
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

enum class Location { Inside, Boundary, Outside };

/// Exact point location; `scale` multiplies every polygon coordinate first,
/// which lets callers test half-integer points such as chord midpoints.
Location locate(const Polygon& poly, const Point& q, std::int64_t scale = 1);

std::int64_t twice_signed_area(const Polygon& poly);

/// Empty when poly is a simple polygon with no duplicate points and no
/// three consecutive collinear vertices; otherwise the reason.
std::optional<std::string> polygon_defect(const Polygon& poly);

/// No three vertices collinear (so no chord passes through a third vertex).
bool in_general_position(const Polygon& poly);

/// Indices of vertices whose interior angle is below pi.
VertexList convex_vertices(const Polygon& poly);

/// True iff i and j are boundary neighbours, or the open segment between
/// them touches no boundary point and its midpoint is strictly interior.
/// A segment grazing a vertex between its endpoints is blocked.
bool segment_inside(const Polygon& poly, std::size_t i, std::size_t j);

/// Naive O(n^3) visibility graph. Throws std::invalid_argument on a
/// polygon that is not simple.
Graph visibility_graph(const Polygon& poly);

/// Visibility restricted to the kept vertices of a pseudo-tower.
Graph visibility_graph(const PseudoTowerPolygon& pt);

/// Canonical (0, 1, ..., n-1).
CycleCandidate boundary_cycle(const Polygon& poly);

// ── Generators ──────────────────────────────────────────────────────
//
// Deterministic per (n, seed). Points live on an integer grid of side
// 2^24; samples violating simplicity, convexity class, or general
// position are redrawn.

/// Apex is vertex 0; the left chain follows, then the right chain climbing
/// back. Requires n >= 4.
Polygon gen_tower(std::size_t n, std::uint64_t seed);

/// Requires n >= 5. The tail hangs off one chain and its last vertex sees
/// nothing but its chain neighbour.
PseudoTowerPolygon gen_pseudo_tower(std::size_t n, std::uint64_t seed);

/// Vertex 0 is a joint; exactly three convex vertices. With `degenerate`,
/// for every minimum-degree joint exactly one vertex of the opposite chain
/// sees both other chains. Throws std::invalid_argument when the request
/// cannot be met.
Polygon gen_pseudo_triangle(std::size_t n, std::uint64_t seed, bool degenerate = false);

/// Random convex polygon with n >= 3 vertices.
Polygon gen_convex(std::size_t n, std::uint64_t seed);

// ── Pseudo-triangle ground truth ────────────────────────────────────

/// The three boundary chains of a pseudo-triangle listed from a chosen
/// top joint: `left` runs top -> left joint, `bottom` left joint -> right
/// joint, `right` top -> right joint (all in polygon vertex ids).
struct ChainLayout {
    VertexList left;
    VertexList bottom;
    VertexList right;
};

/// Layout of a polygon with exactly three convex vertices, taking `top`
/// (one of them) as the top joint.
ChainLayout chain_layout(const Polygon& poly, Vertex top);

/// Bottom-chain vertices that see a vertex of each side chain (side
/// chains exclude their bottom joint, include the top).
VertexList common_bottom_vertices(const Graph& g, const ChainLayout& layout);

// ── File formats ────────────────────────────────────────────────────

/// "n" then n lines "x y". Lines starting with '#' are ignored except a
/// "# keep i j ..." line, which is returned through `keep` when given.
Polygon parse_polygon(std::istream& in, VertexList* keep = nullptr);
Polygon parse_polygon(const std::string& text, VertexList* keep = nullptr);
void write_polygon(std::ostream& out, const Polygon& poly);
void write_pseudo_tower(std::ostream& out, const PseudoTowerPolygon& pt);

/// SVG 1.1 drawing of the boundary as one closed path, plus one <line>
/// per graph edge when a graph is given.
std::string render_svg(const Polygon& poly, const Graph* g = nullptr);

}  // namespace vgr
