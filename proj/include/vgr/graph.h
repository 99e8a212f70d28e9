#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgr {

using Vertex = std::int32_t;
using VertexList = std::vector<Vertex>;

inline constexpr Vertex kNoVertex = -1;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by parse_graph / parse_polygon; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when an input graph cannot belong to the requested polygon class.
class RecognitionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph on the dense vertex ids 0..n-1.
///
/// Immutable after construction. Adjacency lists are sorted, and a bit
/// matrix backs O(1) adjacency queries.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on a self-loop, duplicate edge, or an
    /// endpoint >= n.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges normalized to u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> matrix_;
};

/// A graph on a vertex subset, with the map back to the parent's ids.
struct Subgraph {
    Graph graph;
    VertexList to_parent;    // local id -> parent id
    VertexList from_parent;  // parent id -> local id, kNoVertex if absent

    Vertex local(Vertex parent) const { return from_parent.at(parent); }
    Vertex parent(Vertex local_id) const { return to_parent.at(local_id); }
};

/// Undirected Hamiltonian cycle in canonical form: starts at the smallest
/// id, and the second entry is the smaller of that vertex's two cyclic
/// neighbours. Build one with canonicalize().
class CycleCandidate {
public:
    CycleCandidate() = default;

    std::span<const Vertex> order() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_.size(); }

    friend auto operator<=>(const CycleCandidate&, const CycleCandidate&) = default;

private:
    friend CycleCandidate canonicalize(std::span<const Vertex> order);
    VertexList order_;
};

/// Reads the text graph format: '#' lines and blank lines are ignored, the
/// first data line is "n m", followed by exactly m lines "u v".
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const Graph& g);
std::string serialize_graph(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<VertexList> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Graph induced on `vertices` (duplicates ignored). Local ids follow the
/// ascending order of parent ids.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Throws std::invalid_argument when `order` is not a permutation of 0..k-1.
CycleCandidate canonicalize(std::span<const Vertex> order);

/// True iff c spans g and every cyclically consecutive pair is an edge.
bool is_cycle_in_graph(const Graph& g, const CycleCandidate& c);
bool is_cycle_in_graph(const Graph& g, std::span<const Vertex> order);

std::string to_string(const CycleCandidate& c);

}  // namespace vgr
