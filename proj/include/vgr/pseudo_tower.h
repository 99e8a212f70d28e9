#pragma once

#include <array>
#include <vector>

#include "vgr/graph.h"
#include "vgr/tower.h"

namespace vgr {

/// One reading of a pseudo-tower: the tower part's leveling and both
/// boundary chains, the tail hanging off the end of one of them.
struct PseudoTowerSolution {
    VertexList tail;                 // outermost (degree-1) vertex first
    Leveling tower_levels;           // in input ids; tail vertices have no level
    std::array<VertexList, 2> chains;  // top -> bottom, both start at the top
};

struct TailSplit {
    VertexList tail;      // outermost first
    VertexList residual;  // ascending
};

/// Peels the induced path ending at the unique degree-1 vertex. With no
/// degree-1 vertex the tail is empty. Throws RecognitionError on two or
/// more degree-1 vertices, or when the walk closes a cycle or consumes
/// the whole graph.
TailSplit extract_tail(const Graph& g);

/// Every chain pair obtainable from a bordering of the tower part, with
/// the tail appended to the chain ending at its attachment vertex.
/// Throws RecognitionError when g is disconnected or the tower part
/// admits no leveling.
std::vector<PseudoTowerSolution> solve_pseudo_tower(const Graph& g);

}  // namespace vgr
