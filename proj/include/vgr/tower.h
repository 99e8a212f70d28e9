#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vgr/graph.h"

namespace vgr {

/// Ordered clique cover of a tower graph built greedily from the top.
/// A vertex can sit in several consecutive levels; `first` and `last` give
/// the range (0-based level indices, kNoVertex-free for every vertex).
struct Leveling {
    std::vector<VertexList> levels;
    std::vector<std::size_t> first;
    std::vector<std::size_t> last;

    Vertex top() const { return levels.front().front(); }
    std::size_t level_of(Vertex v) const { return first.at(static_cast<std::size_t>(v)); }
};

/// Pairs that must land on opposite chains, over every vertex but the top.
struct BorderingGraph {
    std::size_t n = 0;
    Vertex top = kNoVertex;
    std::vector<Edge> constraints;          // normalized u < v, sorted
    std::vector<VertexList> components;     // ordered by smallest member
    std::vector<std::size_t> component_of;  // vertex -> index; unused for top
    std::vector<int> color;                 // base 2-coloring (0 / 1), -1 for top
};

enum class Side : unsigned char { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Chain assignment of every vertex except the top.
struct Bordering {
    std::vector<Side> side;  // entry for the top is meaningless
    Side at(Vertex v) const { return side.at(static_cast<std::size_t>(v)); }
};

/// Degree-2 vertices whose two neighbours are adjacent. Throws
/// RecognitionError when there is none.
VertexList tower_top_candidates(const Graph& g);

/// Throws RecognitionError on any violation of the leveling rules.
Leveling compute_leveling(const Graph& g, Vertex top);

/// True when u and v share a level or sit in consecutive levels.
bool covered_by_leveling(const Leveling& lv, Vertex u, Vertex v);

/// Throws RecognitionError when the constraint graph is not bipartite.
BorderingGraph bordering_graph(const Graph& g, const Leveling& lv);

/// 2^(c-1) for c components (the global swap is not counted).
std::size_t bordering_count(const BorderingGraph& bg);

/// Every 2-coloring of the constraint graph up to a global swap. The
/// component holding the smallest vertex keeps its base coloring, in which
/// each component's smallest vertex is Left. Throws std::length_error past
/// `limit` results.
std::vector<Bordering> enumerate_borderings(const BorderingGraph& bg, std::size_t limit = 1u << 20);

/// Bordering with the given components flipped relative to the base coloring.
Bordering make_bordering(const BorderingGraph& bg, const std::vector<bool>& flipped);

/// Top, Left chain by increasing first level, Right chain by decreasing
/// first level. Empty when the result is not a Hamiltonian cycle of g.
std::optional<CycleCandidate> tower_hamiltonian(const Graph& g, const Leveling& lv,
                                                const Bordering& b);

/// The two open chains top -> bottom for a bordering (both start at top).
std::pair<VertexList, VertexList> tower_chains(const Leveling& lv, const Bordering& b);

/// Recognition criterion for towers given the boundary cycle: after
/// deleting h's edges the non-isolated vertices form a connected bipartite
/// graph split by the two chains of h, and the chains carry a strong
/// ordering read from the top.
bool check_strong_ordering(const Graph& g, const CycleCandidate& h);

/// Every boundary cycle of g as a tower over all top candidates and
/// borderings, canonical and sorted. Throws RecognitionError when no
/// leveling succeeds.
std::vector<CycleCandidate> solve_tower(const Graph& g);

}  // namespace vgr
