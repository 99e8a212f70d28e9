#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "vgr/geometry.h"
#include "vgr/graph.h"
#include "vgr/tower.h"
#include "vgr/triangle.h"

namespace fixture {

using vgr::Edge;
using vgr::Graph;
using vgr::Polygon;
using vgr::Vertex;
using vgr::VertexList;

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// Five-vertex tower: 0=(0,4) 1=(-1,2) 2=(-3,0) 3=(3,0) 4=(1,2).
Polygon t5_polygon();
/// Boundary plus chords 1-4, 1-3, 2-4.
Graph t5_graph();
/// T5 plus a pendant path 2-5, 5-6.
Graph t5_pendant_graph();

/// Six-vertex pseudo-triangle:
/// 0=(0,60) 1=(-8,30) 2=(-20,0) 3=(-5,6) 4=(20,0) 5=(8,30).
Polygon pt6_polygon();

Graph k3();
Graph k33();
Graph star3();
Graph path3();

}  // namespace fixture

namespace oracle {

using vgr::Graph;
using vgr::Polygon;
using vgr::VertexList;

/// Visibility by a different rule than the library: the segment may not
/// touch any boundary edge away from its endpoints, and it must leave
/// vertex i into the interior angle there.
Graph visibility(const Polygon& poly);

/// Every Hamiltonian cycle by exhaustive search, each once, in canonical
/// form (starts at 0, second entry smaller than the last).
std::set<VertexList> hamiltonian_cycles(const Graph& g);

/// Proper 2-colorings of the constraint graph counted by brute force over
/// all assignments, divided by two for the global swap.
std::size_t bordering_colorings(const vgr::BorderingGraph& bg);

/// Components of the constraint graph by union-find.
std::size_t constraint_components(const vgr::BorderingGraph& bg);

/// The two boundary chains (top first) of a generated pseudo-tower, in
/// graph ids.
std::pair<VertexList, VertexList> pseudo_tower_chains(const vgr::PseudoTowerPolygon& pt);

/// Hamiltonian cycles of g (exhaustive) that pass verify_candidate for
/// some choice of top and bottom joints.
std::set<VertexList> verified_cycles(const Graph& g);

/// Canonical form written out here rather than through the library.
VertexList canonical(VertexList order);

}  // namespace oracle

namespace gen {

using vgr::Graph;
using vgr::VertexList;

/// Seeded source for the hand-rolled property generators.
class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Random connected graph: a random spanning tree plus each other pair
/// with probability p.
Graph connected_graph(Source& src, std::size_t n, double p);

/// g with one pair toggled (an edge removed or a non-edge added).
Graph toggle_pair(const Graph& g, Source& src);

}  // namespace gen
