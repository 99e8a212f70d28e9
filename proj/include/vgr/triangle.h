#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vgr/graph.h"
#include "vgr/pseudo_tower.h"
#include "vgr/tower.h"

namespace vgr {

/// Boundary chain listed from one joint to the other; both endpoints are
/// joints.
struct Chain {
    VertexList vertices;

    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

/// Partition of V around a split edge e = (w0, w1): C above the edge
/// (holding the top joint), A below on w0's side, B below on w1's side.
struct SplitDecomposition {
    Vertex top = kNoVertex;
    Edge e;           // ordered: e.u = w0, e.v = w1
    VertexList C, A, B;
    VertexList X;     // C-vertices adjacent to both endpoints of e
    VertexList Y;     // C \ X
};

/// A candidate boundary: cycle plus the chains U (top -> left joint),
/// V (top -> right joint), W (left joint -> right joint).
struct PseudoTriangleSolution {
    CycleCandidate cycle;
    std::array<Chain, 3> chains;   // U, V, W
    std::array<Vertex, 3> joints;  // c(U,V), c(U,W), c(V,W)
    SplitDecomposition decomposition;
};

/// Every vertex of minimum degree. Throws RecognitionError when there are
/// more than three.
VertexList top_joint_candidates(const Graph& g);

/// Neighbours of p on the chain, in chain order.
VertexList chain_neighborhood(const Graph& g, const Chain& chain, Vertex p);

/// Every edge avoiding `top`, in both orientations, sorted.
std::vector<Edge> split_edge_candidates(const Graph& g, Vertex top);

/// Split edges for polygons where a single bottom vertex sees both side
/// chains: each vertex other than top paired with each of its neighbours
/// in both directions. Sorted, and largely redundant with
/// split_edge_candidates; solve() merges the two lists.
std::vector<Edge> degenerate_split(const Graph& g, Vertex top);

struct UpperPart {
    VertexList C, X, Y;
};

/// Where the leveling that collects C above X stops: at the first level
/// meeting X, at the first level inside X (both sides have arrived), or
/// once all of X is placed; or (Sided) tracking which side chain each
/// level vertex continues and ending a side when it reaches X. Stopping
/// early misses side-chain vertices that sit below X's top on the other
/// side; running on can pull in vertices below X. solve() tries each.
enum class LevelStop { FirstContact, WholeLevel, AllOfX, Sided };

/// C for the candidate (top, e), or empty when the candidate fails.
std::optional<UpperPart> extract_C(const Graph& g, Vertex top, Edge e, LevelStop stop = LevelStop::FirstContact);

/// Components of G - C - e; accepted only when there are exactly two,
/// split between the endpoints of e.
std::optional<std::pair<VertexList, VertexList>> split_AB(const Graph& g, const VertexList& C, Edge e);

/// extract_C followed by split_AB.
std::optional<SplitDecomposition> decompose(const Graph& g, Vertex top, Edge e,
                                             LevelStop stop = LevelStop::FirstContact);

/// W-vertices below C relevant to the side assignment of C. `common` are
/// those seen by both bottom side vertices pa and pb; `w_prime` and
/// `w_second` are seen by the first vertex below pa (resp. pb) and are
/// not common. Each list is in boundary order from w0's side.
struct SplitChain {
    VertexList common;
    VertexList w_prime;
    VertexList w_second;
};

/// The lower boundary for part-path choices: `a_path` runs from the first
/// A-vertex below pa through A to w0, `b_path` from w1 through B to the
/// first B-vertex below pb.
struct LowerPaths {
    VertexList a_path;
    VertexList b_path;
};

std::optional<SplitChain> compute_split_chain(const Graph& g, Vertex pa, Vertex pb,
                                              const LowerPaths& lower);

/// Two chains of C from the top; U-side first. Either may be just {top}.
struct UpperChains {
    VertexList u_side;
    VertexList v_side;
};

/// Side assignments of C consistent with the leveling of G[C] and with
/// the visibility constraints toward A and B, for one choice of lower
/// paths. Components of the bordering graph are fixed top to bottom; a
/// component with no admissible orientation ends that branch.
std::vector<UpperChains> apply_bordering_constraints(const Graph& g, const SplitDecomposition& dec,
                                                     const LowerPaths& lower);

/// Hamiltonian paths of G[A] ending at w0 (and of G[B] starting at w1)
/// read off the pseudo-tower solutions of the parts.
std::vector<VertexList> part_paths(const Graph& g, const VertexList& part, Vertex end);

/// Ways to cut a cycle starting at the top into three chord-free chains,
/// as (left joint, right joint) pairs; left is met first along `order`.
std::vector<std::pair<Vertex, Vertex>> bottom_joint_placements(const Graph& g, std::span<const Vertex> order);

/// Joins the pieces into a cycle. Empty when a connecting edge is missing
/// or no joint placement exists; otherwise the joints are the first
/// placement accepted by verify_candidate, or the first placement.
std::optional<PseudoTriangleSolution> assemble_hamiltonian(const Graph& g, const SplitDecomposition& dec,
                                                           const UpperChains& upper,
                                                           const LowerPaths& lower);

/// Necessary conditions for g to be the visibility graph of a
/// pseudo-triangle with this boundary: the cycle lies in g, joints are the
/// chain endpoints, no chords within a chain, every vertex sees a
/// contiguous run of each chain, and visibility from a side chain into the
/// bottom chain only grows downward.
bool verify_candidate(const Graph& g, const PseudoTriangleSolution& sol);

/// Builds chains from a cycle and its three joints.
PseudoTriangleSolution solution_from_cycle(std::span<const Vertex> cycle, Vertex top, Vertex left,
                                           Vertex right);

struct SolveOptions {
    unsigned threads = 1;
};

/// How many (top, split-edge) candidates each stage rejected.
struct SolveStats {
    std::size_t candidates = 0;
    std::map<std::string, std::size_t> rejected;
};

/// All verified boundaries over every top candidate and split edge,
/// deduplicated by canonical cycle and sorted.
std::vector<PseudoTriangleSolution> solve(const Graph& g, const SolveOptions& options = {},
                                          SolveStats* stats = nullptr);

}  // namespace vgr
